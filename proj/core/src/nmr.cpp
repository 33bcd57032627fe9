#include "nuosc/nmr.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace nuosc {

using std::complex;

DensityMatrix DensityMatrix::from_state(const Vector4& psi) {
    const double n2 = psi.squaredNorm();
    if (n2 <= 0.0) throw std::domain_error("DensityMatrix: zero state");
    return DensityMatrix{(psi * psi.adjoint()) / n2};
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix{Matrix4::Identity() / 4.0};
}

void DensityMatrix::validate() const {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::domain_error("DensityMatrix: not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > 1e-12)
        throw std::domain_error("DensityMatrix: trace != 1");
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(rho);
    if (solver.eigenvalues().minCoeff() < -1e-10)
        throw std::domain_error("DensityMatrix: not positive semidefinite");
}

DensityMatrix pps_state(const PpsParams& params) {
    if (!(params.eta > 0.0) || params.eta > 1.0)
        throw std::domain_error("pps_state: eta must lie in (0, 1]");
    Matrix4 rho = Matrix4::Identity() * ((1.0 - params.eta) / 4.0);
    rho(0, 0) += params.eta;
    return DensityMatrix{rho};
}

namespace {

// Eigenvalues below this relative level are rank-deficiency noise; taking
// their square root would amplify O(eps) rounding into O(sqrt(eps)) errors.
constexpr double kRankCutoff = 1e-14;

Matrix4 psd_sqrt(const Matrix4& m, const char* where) {
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(m);
    Eigen::Vector4d ev = solver.eigenvalues();
    if (ev.minCoeff() < -1e-10) throw std::domain_error(std::string(where) + ": not PSD");
    const double cutoff = kRankCutoff * std::max(ev.maxCoeff(), 0.0);
    Vector4 root;
    for (int i = 0; i < 4; ++i) root(i) = ev(i) > cutoff ? std::sqrt(ev(i)) : 0.0;
    return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
}

const Matrix2 kRyHalfPi = [] {
    Matrix2 r;
    r << 1, -1, 1, 1;
    return (r / std::sqrt(2.0)).eval();
}();

}  // namespace

double fidelity(const DensityMatrix& rho_th, const DensityMatrix& rho_exp) {
    rho_exp.validate();
    const Matrix4 root = psd_sqrt(rho_th.rho, "fidelity");
    const Matrix4 inner = root * rho_exp.rho * root;
    Eigen::SelfAdjointEigenSolver<Matrix4> solver((inner + inner.adjoint()) / 2.0);
    const Eigen::Vector4d ev = solver.eigenvalues();
    const double cutoff = kRankCutoff * std::max(ev.maxCoeff(), 0.0);
    double tr = 0.0;
    for (int i = 0; i < 4; ++i)
        if (ev(i) > cutoff) tr += std::sqrt(ev(i));
    return std::min(tr * tr, 1.0 + 1e-12);
}

DensityMatrix acquisition_map(const DensityMatrix& rho, AcquisitionPulse pulse) {
    const Matrix4 u = pulse == AcquisitionPulse::YI
                          ? Eigen::kroneckerProduct(kRyHalfPi, Matrix2::Identity()).eval()
                          : Eigen::kroneckerProduct(Matrix2::Identity(), kRyHalfPi).eval();
    return DensityMatrix{u * rho.rho * u.adjoint()};
}

SpectralReadout readout(const DensityMatrix& rho) {
    const Matrix4 r1 = acquisition_map(rho, AcquisitionPulse::YI).rho;
    const Matrix4 r2 = acquisition_map(rho, AcquisitionPulse::IY).rho;
    SpectralReadout out;
    out.r1_13 = r1(0, 2).real();
    out.r1_24 = r1(1, 3).real();
    out.r2_12 = r2(0, 1).real();
    out.r2_34 = r2(2, 3).real();
    return out;
}

SpectralReadout noisy_readout(const DensityMatrix& rho, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) throw std::domain_error("noisy_readout: sigma must be >= 0");
    SpectralReadout r = readout(rho);
    if (sigma > 0.0) {
        std::mt19937_64 gen(seed);
        std::normal_distribution<double> noise(0.0, sigma);
        r.r1_13 += noise(gen);
        r.r1_24 += noise(gen);
        r.r2_12 += noise(gen);
        r.r2_34 += noise(gen);
    }
    r.sigma = sigma;
    return r;
}

ExtractedProbabilities extract_probabilities(const SpectralReadout& r) {
    const double s = r.r1_13 + r.r1_24;
    ExtractedProbabilities out;
    out.p_e = (1.0 + 2.0 * s + 4.0 * r.r2_12) / 4.0;
    out.p_mu = (1.0 + 2.0 * s - 4.0 * r.r2_12) / 4.0;
    out.p_tau = (1.0 - 2.0 * s + 4.0 * r.r2_34) / 4.0;
    out.p_e_clamped = std::clamp(out.p_e, 0.0, 1.0);
    out.p_mu_clamped = std::clamp(out.p_mu, 0.0, 1.0);
    out.p_tau_clamped = std::clamp(out.p_tau, 0.0, 1.0);
    return out;
}

}  // namespace nuosc

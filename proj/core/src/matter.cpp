#include "nuosc/matter.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace nuosc {

using std::complex;
using namespace std::complex_literals;

Matrix3 matter_hamiltonian(const OscParams& p, const MatterContext& ctx) {
    const Matrix3 u = build_pmns(p);
    Eigen::Vector3d masses(0.0, p.dm2_21, p.dm2_31);
    Matrix3 twoEH = u * masses.asDiagonal() * u.adjoint();
    twoEH(0, 0) += ctx.a();
    Matrix3 h = twoEH / (2.0 * ctx.E_GeV);
    // symmetrize away rounding in the congruence product
    return ((h + h.adjoint()) / 2.0).eval();
}

MatterSpectrum exact_diagonalize(const Matrix3& h) {
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::domain_error("exact_diagonalize: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix3> solver(h);
    MatterSpectrum spec;
    spec.eigenvalues = solver.eigenvalues();  // ascending
    spec.mixing = solver.eigenvectors();
    for (int c = 0; c < 3; ++c) {
        int imax = 0;
        double vmax = -1.0;
        for (int r = 0; r < 3; ++r) {
            const double m = std::abs(spec.mixing(r, c));
            if (m > vmax) {
                vmax = m;
                imax = r;
            }
        }
        const complex<double> pivot = spec.mixing(imax, c);
        if (std::abs(pivot) > 0.0) spec.mixing.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
    return spec;
}

EffectiveParams approx_effective_params(const OscParams& p, const MatterContext& ctx) {
    const double a = ctx.a();
    const double c2t12 = std::cos(2.0 * p.theta12);
    const double s2t12 = std::sin(2.0 * p.theta12);
    const double c2t13 = std::cos(2.0 * p.theta13);
    const double s2t13 = std::sin(2.0 * p.theta13);

    EffectiveParams eff;
    eff.dm2_ee = p.dm2_31 * std::cos(p.theta12) * std::cos(p.theta12) +
                 p.dm2_32() * std::sin(p.theta12) * std::sin(p.theta12);
    eff.eps2 = a / eff.dm2_ee;
    eff.resonance_crossed = a >= eff.dm2_ee;

    const double root13 = std::sqrt((c2t13 - eff.eps2) * (c2t13 - eff.eps2) + s2t13 * s2t13);
    const double c2t13_t = (c2t13 - eff.eps2) / root13;
    eff.theta13_t = 0.5 * std::acos(std::clamp(c2t13_t, -1.0, 1.0));
    eff.phi13 = eff.theta13_t - p.theta13;

    eff.eps1 = (a / p.dm2_21) * std::pow(std::cos(eff.phi13 + p.theta13), 2) +
               eff.dm2_ee * std::pow(std::sin(eff.phi13), 2) / p.dm2_21;

    const double c2phi = std::cos(2.0 * eff.phi13);
    const double root12 =
        std::sqrt((c2t12 - eff.eps1) * (c2t12 - eff.eps1) + s2t12 * c2phi * s2t12 * c2phi);
    const double c2t12_t = (c2t12 - eff.eps1) / root12;
    eff.theta12_t = 0.5 * std::acos(std::clamp(c2t12_t, -1.0, 1.0));

    eff.dm2_21_t = p.dm2_21 * root12;
    eff.dm2_31_t = 0.75 * eff.dm2_ee * root13 + 0.25 * (eff.dm2_ee + a) +
                   0.5 * (eff.dm2_21_t - p.dm2_21 * c2t12);

    eff.theta23_t = p.theta23;
    eff.delta_t = p.delta;
    return eff;
}

double matter_probability(const OscParams& p, const MatterContext& ctx, double L_km,
                          Flavor alpha, Flavor beta, MatterMode mode) {
    if (!is_active(alpha) || !is_active(beta))
        throw std::invalid_argument("matter_probability: flavors must be active");
    if (mode == MatterMode::Approx) {
        const OscParams eff = approx_effective_params(p, ctx).as_osc_params(p);
        return probability_closed_form(eff, Baseline(L_km, ctx.E_GeV), alpha, beta);
    }
    const MatterSpectrum spec = exact_diagonalize(matter_hamiltonian(p, ctx));
    // eigenvalues are (2E H)/2E in eV²/GeV; phases need dm²-like eV² values,
    // hence the 2E factor folded back in: phi_j = k * (2E lambda_j) * L/E
    Vector3 phases;
    for (int j = 0; j < 3; ++j) {
        const double phi = kPhasePerEv2KmGeV * 2.0 * spec.eigenvalues(j) * L_km;
        phases(j) = std::exp(-1i * phi);
    }
    const Matrix3 evol = spec.mixing * phases.asDiagonal() * spec.mixing.adjoint();
    const complex<double> amp = evol(static_cast<int>(beta), static_cast<int>(alpha));
    double pr = std::norm(amp);
    if (pr > 1.0 && pr < 1.0 + 1e-9) pr = 1.0;
    return pr;
}

Eigen::Vector3d matter_probabilities(const OscParams& p, const MatterContext& ctx, double L_km,
                                     Flavor alpha, MatterMode mode) {
    Eigen::Vector3d out;
    out << matter_probability(p, ctx, L_km, alpha, Flavor::e, mode),
        matter_probability(p, ctx, L_km, alpha, Flavor::mu, mode),
        matter_probability(p, ctx, L_km, alpha, Flavor::tau, mode);
    return out;
}

}  // namespace nuosc

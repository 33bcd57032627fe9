#include "nuosc/weyl.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace nuosc {

using std::complex;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi / 2.0;
constexpr double kPi4 = kPi / 4.0;

const Matrix2 kPauliX = (Matrix2() << 0, 1, 1, 0).finished();
const Matrix2 kPauliY = (Matrix2() << 0, -1i, 1i, 0).finished();
const Matrix2 kPauliZ = (Matrix2() << 1, 0, 0, -1).finished();
const Matrix2 kIPX = 1i * kPauliX;
const Matrix2 kIPY = 1i * kPauliY;
const Matrix2 kIPZ = 1i * kPauliZ;

// Non-normalized magic basis; rows have norm sqrt(2), so B * B^dag = 2 I and
// the inverse is B^dag / 2.
const Matrix4 kMagic = [] {
    Matrix4 b;
    b << 1, 1i, 0, 0,
        0, 0, 1i, 1,
        0, 0, 1i, -1,
        1, -1i, 0, 0;
    return b;
}();

Matrix4 into_magic(const Matrix4& u) { return kMagic * u * (kMagic.adjoint() / 2.0); }
Matrix4 outof_magic(const Matrix4& u) { return (kMagic.adjoint() / 2.0) * u * kMagic; }

double rem_euclid(double x, double m) {
    double r = std::fmod(x, m);
    return r < 0 ? r + m : r;
}

/// Simultaneous diagonalization of a complex-symmetric unitary M = A + iB:
/// A and B are commuting real-symmetric matrices, so a random real mix of
/// them almost surely separates all eigenspaces. Returns orthogonal P with
/// det +1 and the unit-modulus eigenvalues d, M = P diag(d) P^T.
std::pair<Eigen::Matrix4d, Vector4> diagonalize_complex_symmetric(const Matrix4& m) {
    std::mt19937 gen(2023);
    std::normal_distribution<double> dist;
    for (int attempt = 0; attempt < 100; ++attempt) {
        const double wa = attempt == 0 ? 1.0 : dist(gen);
        const double wb = attempt == 0 ? 0.5 : dist(gen);
        const Eigen::Matrix4d mix = wa * m.real() + wb * m.imag();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(mix);
        const Eigen::Matrix4d p = solver.eigenvectors();
        const Matrix4 pc = p.cast<complex<double>>();
        const Vector4 d = (pc.transpose() * m * pc).diagonal();
        const Matrix4 rebuilt = pc * d.asDiagonal() * pc.transpose();
        if ((rebuilt - m).cwiseAbs().maxCoeff() < 1e-12) return {p, d};
    }
    throw std::runtime_error("weyl_decompose: failed to diagonalize M^T M");
}

}  // namespace

Matrix4 canonical_matrix(double a, double b, double c) {
    const Matrix4 xx = Eigen::kroneckerProduct(kPauliX, kPauliX);
    const Matrix4 yy = Eigen::kroneckerProduct(kPauliY, kPauliY);
    const Matrix4 zz = Eigen::kroneckerProduct(kPauliZ, kPauliZ);
    // the three generators commute, and each squares to the identity
    auto factor = [](const Matrix4& g, double t) -> Matrix4 {
        return std::cos(t) * Matrix4::Identity() + 1i * std::sin(t) * g;
    };
    return factor(xx, a) * factor(yy, b) * factor(zz, c);
}

KronFactors factor_kron(const Matrix4& k4) {
    Matrix2 r = k4.block<2, 2>(0, 0);
    if (std::abs(r.determinant()) < 0.1) r = k4.block<2, 2>(2, 0);
    const complex<double> detr = r.determinant();
    if (std::abs(detr) < 0.1)
        throw std::domain_error("factor_kron: input is not a tensor product");
    r /= std::sqrt(detr);

    const Matrix4 temp = k4 * Eigen::kroneckerProduct(Matrix2::Identity(), r.adjoint());
    Matrix2 l;
    l << temp(0, 0), temp(0, 2), temp(2, 0), temp(2, 2);
    const complex<double> detl = l.determinant();
    if (std::abs(detl) < 0.9)
        throw std::domain_error("factor_kron: input is not a tensor product");
    l /= std::sqrt(detl);
    const double phase = std::arg(detl) / 2.0;

    KronFactors out{l, r, phase};
    const Matrix4 rebuilt =
        std::exp(1i * phase) * Eigen::kroneckerProduct(out.l, out.r).eval();
    if ((rebuilt - k4).cwiseAbs().maxCoeff() > 1e-9)
        throw std::domain_error("factor_kron: input is not a tensor product");
    return out;
}

WeylDecomposition weyl_decompose(const Matrix4& unitary) {
    if ((unitary * unitary.adjoint() - Matrix4::Identity()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::domain_error("weyl_decompose: input is not unitary");

    const complex<double> det = unitary.determinant();
    const Matrix4 u = unitary * std::pow(det, -0.25);
    double phase = std::arg(det) / 4.0;

    const Matrix4 up = outof_magic(u);
    const Matrix4 m2 = up.transpose() * up;
    auto [p, d] = diagonalize_complex_symmetric(m2);

    Eigen::Vector4d dreal = -d.array().arg() / 2.0;
    dreal(3) = -dreal(0) - dreal(1) - dreal(2);
    Eigen::Vector3d cs;
    for (int i = 0; i < 3; ++i) cs(i) = rem_euclid((dreal(i) + dreal(3)) / 2.0, 2.0 * kPi);

    // order the coordinates by their distance to the nearest multiple of
    // pi/2, then rotate the ordering so the chamber flips below terminate
    Eigen::Vector3d folded;
    for (int i = 0; i < 3; ++i) {
        const double t = rem_euclid(cs(i), kPi2);
        folded(i) = std::min(t, kPi2 - t);
    }
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int lhs, int rhs) { return folded(lhs) < folded(rhs); });
    order = {order[1], order[2], order[0]};
    const Eigen::Vector3d cs0 = cs;
    const Eigen::Vector4d dreal0 = dreal;
    Eigen::Matrix4d p0 = p;
    for (int i = 0; i < 3; ++i) {
        cs(i) = cs0(order[i]);
        dreal(i) = dreal0(order[i]);
        p.col(i) = p0.col(order[i]);
    }
    if (p.determinant() < 0.0) p.col(3) *= -1.0;

    Vector4 expd;
    for (int i = 0; i < 4; ++i) expd(i) = std::exp(1i * dreal(i));
    const Matrix4 pc = p.cast<complex<double>>();
    const Matrix4 k1 = into_magic(up * pc * expd.asDiagonal());
    const Matrix4 k2 = into_magic(pc.transpose());

    const KronFactors f1 = factor_kron(k1);
    const KronFactors f2 = factor_kron(k2);
    Matrix2 k1l = f1.l, k1r = f1.r, k2l = f2.l, k2r = f2.r;
    phase += f1.phase + f2.phase;

    // fold into the Weyl chamber pi/4 >= cs0 >= cs1 >= |cs2|
    if (cs(0) > kPi2) {
        cs(0) -= 3.0 * kPi2;
        k1l = k1l * kIPY;
        k1r = k1r * kIPY;
        phase += kPi2;
    }
    if (cs(1) > kPi2) {
        cs(1) -= 3.0 * kPi2;
        k1l = k1l * kIPX;
        k1r = k1r * kIPX;
        phase += kPi2;
    }
    int conjs = 0;
    if (cs(0) > kPi4) {
        cs(0) = kPi2 - cs(0);
        k1l = k1l * kIPY;
        k2r = kIPY * k2r;
        conjs += 1;
        phase -= kPi2;
    }
    if (cs(1) > kPi4) {
        cs(1) = kPi2 - cs(1);
        k1l = k1l * kIPX;
        k2r = kIPX * k2r;
        conjs += 1;
        phase += kPi2;
        if (conjs == 1) phase -= kPi;
    }
    if (cs(2) > kPi2) {
        cs(2) -= 3.0 * kPi2;
        k1l = k1l * kIPZ;
        k1r = k1r * kIPZ;
        phase += kPi2;
        if (conjs == 1) phase -= kPi;
    }
    if (conjs == 1) {
        cs(2) = kPi2 - cs(2);
        k1l = k1l * kIPZ;
        k2r = kIPZ * k2r;
        phase += kPi2;
    }
    if (cs(2) > kPi4) {
        cs(2) -= kPi2;
        k1l = k1l * kIPZ;
        k1r = k1r * kIPZ;
        phase -= kPi2;
    }

    WeylDecomposition dec;
    dec.a = cs(1);
    dec.b = cs(0);
    dec.c = cs(2);

    // boundary identification: at a = pi/4 the classes (a,b,c) and (a,b,-c)
    // coincide via N(pi/2-a,b,-c) = i (XX)(Y(x)I) N(a,b,c) (Y(x)I); pick the
    // c >= 0 representative so equal classes decompose identically
    if (dec.c < -1e-11 && kPi4 - dec.a < 1e-11) {
        k1l = k1l * (-kPauliZ);
        k1r = k1r * kPauliX;
        k2l = kPauliY * k2l;
        dec.a = std::min(kPi2 - dec.a, kPi4);
        dec.c = -dec.c;
    }

    dec.k1l = k1l;
    dec.k1r = k1r;
    dec.k2l = k2l;
    dec.k2r = k2r;
    dec.phase = phase;
    return dec;
}

Matrix4 weyl_reconstruct(const WeylDecomposition& d) {
    return std::exp(1i * d.phase) * Eigen::kroneckerProduct(d.k1l, d.k1r).eval() *
           canonical_matrix(d.a, d.b, d.c) * Eigen::kroneckerProduct(d.k2l, d.k2r).eval();
}

double phase_aligned_distance(const Matrix4& u, const Matrix4& w) {
    const complex<double> tr = (w.adjoint() * u).trace();
    if (std::abs(tr) < 1e-14) {
        // no preferred alignment; fall back to the best of a few phases
        double best = std::numeric_limits<double>::max();
        for (int k = 0; k < 8; ++k) {
            const complex<double> ph = std::exp(1i * (kPi * k / 4.0));
            best = std::min(best, (u - ph * w).cwiseAbs().maxCoeff());
        }
        return best;
    }
    const complex<double> ph = tr / std::abs(tr);
    return (u - ph * w).cwiseAbs().maxCoeff();
}

}  // namespace nuosc

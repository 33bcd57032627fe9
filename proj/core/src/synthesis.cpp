#include "nuosc/synthesis.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace nuosc {

using std::complex;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi / 2.0;
constexpr double kPi4 = kPi / 4.0;
constexpr double kClassTol = 1e-11;

/// Entangling cores realizing a requested canonical class with the minimal
/// CNOT count. Residual local frames are irrelevant here: the synthesizer
/// re-decomposes the core and absorbs its local factors.
Circuit core_for_class(double a, double b, double c) {
    Circuit core;
    if (std::abs(c) < kClassTol) {
        if (b < kClassTol && std::abs(a - kPi4) < kClassTol) {
            core.append(Gate::cnot(0, 1));
            return core;
        }
        // exp(i(a XX + b ZZ)), class (a, b, 0)
        core.append(Gate::cnot(0, 1));
        core.append(Gate::rx(0, -2.0 * a));
        core.append(Gate::rz(1, -2.0 * b));
        core.append(Gate::cnot(0, 1));
        return core;
    }
    // generic three-CNOT template with class exactly (a, b, c)
    core.append(Gate::cnot(1, 0));
    core.append(Gate::ry(1, 2.0 * c + kPi2));
    core.append(Gate::cnot(0, 1));
    core.append(Gate::rz(0, 2.0 * a - kPi2));
    core.append(Gate::ry(1, 2.0 * b - kPi2));
    core.append(Gate::cnot(1, 0));
    return core;
}

}  // namespace

Circuit zyz_gates(const Matrix2& u, int target) {
    const complex<double> det = u.determinant();
    const Matrix2 su = u / std::sqrt(det);
    // su = [[cos(t/2) e^{-i(p+l)/2}, -sin(t/2) e^{-i(p-l)/2}],
    //       [sin(t/2) e^{ i(p-l)/2},  cos(t/2) e^{ i(p+l)/2}]]
    const double theta = 2.0 * std::atan2(std::abs(su(1, 0)), std::abs(su(0, 0)));
    double phi_plus_lambda = 0.0, phi_minus_lambda = 0.0;
    if (std::abs(su(0, 0)) > 1e-14) phi_plus_lambda = 2.0 * std::arg(su(1, 1));
    if (std::abs(su(1, 0)) > 1e-14) phi_minus_lambda = 2.0 * std::arg(su(1, 0));
    const double phi = (phi_plus_lambda + phi_minus_lambda) / 2.0;
    const double lambda = (phi_plus_lambda - phi_minus_lambda) / 2.0;

    Circuit c;
    auto push_rz = [&](double angle) {
        if (std::abs(angle) > 1e-12) c.append(Gate::rz(target, angle));
    };
    push_rz(lambda);
    if (std::abs(theta) > 1e-12) c.append(Gate::ry(target, theta));
    push_rz(phi);
    return c;
}

Circuit synthesize(const Matrix4& unitary) {
    const WeylDecomposition dec = weyl_decompose(unitary);

    if (std::max({dec.a, dec.b, std::abs(dec.c)}) < kClassTol) {
        const complex<double> det = unitary.determinant();
        const KronFactors f = factor_kron(unitary * std::pow(det, -0.25));
        Circuit out = zyz_gates(f.l, 0);
        out.append(zyz_gates(f.r, 1));
        return simplify(out);
    }

    const Circuit core = core_for_class(dec.a, dec.b, dec.c);
    const WeylDecomposition cdec = weyl_decompose(circuit_unitary(core));
    if (std::abs(cdec.a - dec.a) > 1e-8 || std::abs(cdec.b - dec.b) > 1e-8 ||
        std::abs(cdec.c - dec.c) > 1e-8)
        throw std::logic_error("synthesize: core template class mismatch");

    // U = (k1 g1^dag) core (g2^dag k2) up to phase, since both share N(a,b,c)
    Circuit out;
    out.append(zyz_gates(cdec.k2l.adjoint() * dec.k2l, 0));
    out.append(zyz_gates(cdec.k2r.adjoint() * dec.k2r, 1));
    out.append(core);
    out.append(zyz_gates(dec.k1l * cdec.k1l.adjoint(), 0));
    out.append(zyz_gates(dec.k1r * cdec.k1r.adjoint(), 1));
    return simplify(out);
}

}  // namespace nuosc

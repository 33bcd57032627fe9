#include "nuosc/pmns.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace nuosc {

using std::complex;
using namespace std::complex_literals;

Matrix3 build_pmns(const OscParams& p) {
    const double c12 = std::cos(p.theta12), s12 = std::sin(p.theta12);
    const double c13 = std::cos(p.theta13), s13 = std::sin(p.theta13);
    const double c23 = std::cos(p.theta23), s23 = std::sin(p.theta23);
    const complex<double> eid = std::exp(1i * p.delta);
    const complex<double> emid = std::exp(-1i * p.delta);

    Matrix3 u;
    u << c12 * c13, s12 * c13, s13 * emid,
        -s12 * c23 - c12 * s23 * s13 * eid, c12 * c23 - s12 * s23 * s13 * eid, s23 * c13,
        s12 * s23 - c12 * c23 * s13 * eid, -c12 * s23 - s12 * c23 * s13 * eid, c23 * c13;
    if (p.antineutrino) u = u.conjugate().eval();
    return u;
}

Matrix3 vacuum_phase_matrix(const OscParams& p, const Baseline& b) {
    if (!(b.E_GeV > 0.0)) throw std::domain_error("vacuum_phase_matrix: E must be > 0");
    const double loe = b.l_over_e();
    const double phi21 = kPhasePerEv2KmGeV * p.dm2_21 * loe;
    const double phi31 = kPhasePerEv2KmGeV * p.dm2_31 * loe;
    Matrix3 m = Matrix3::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = std::exp(-1i * phi21);
    m(2, 2) = std::exp(-1i * phi31);
    return m;
}

Vector3 propagate(const OscParams& p, const Baseline& b, Flavor initial) {
    if (!is_active(initial)) throw std::invalid_argument("propagate: initial flavor must be active");
    const Matrix3 u = build_pmns(p);
    const Matrix3 m = vacuum_phase_matrix(p, b);
    Vector3 state = Vector3::Zero();
    state(static_cast<int>(initial)) = 1.0;
    return u * (m * (u.adjoint() * state));
}

namespace {

double finalize_probability(complex<double> value, const char* where) {
    if (std::abs(value.imag()) > 1e-9)
        throw std::runtime_error(std::string(where) + ": imaginary residual exceeds 1e-9");
    double pr = value.real();
    if (pr < 0.0) {
        if (pr < -1e-9) throw std::runtime_error(std::string(where) + ": negative probability");
        pr = 0.0;
    }
    if (pr > 1.0) {
        if (pr > 1.0 + 1e-9) throw std::runtime_error(std::string(where) + ": probability above 1");
        pr = 1.0;
    }
    return pr;
}

}  // namespace

double probability_closed_form(const OscParams& p, const Baseline& b,
                               Flavor alpha, Flavor beta) {
    if (!is_active(alpha) || !is_active(beta))
        throw std::invalid_argument("probability_closed_form: flavors must be active");
    const Matrix3 u = build_pmns(p);
    const double loe = b.l_over_e();
    const double m2[3] = {0.0, p.dm2_21, p.dm2_31};
    const int a = static_cast<int>(alpha), bb = static_cast<int>(beta);

    complex<double> sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double phi = kPhasePerEv2KmGeV * (m2[i] - m2[j]) * loe;
            sum += std::conj(u(a, i)) * u(bb, i) * u(a, j) * std::conj(u(bb, j)) *
                   std::exp(-1i * phi);
        }
    }
    return finalize_probability(sum, "probability_closed_form");
}

double probability_via_propagation(const OscParams& p, const Baseline& b,
                                   Flavor alpha, Flavor beta) {
    const Vector3 state = propagate(p, b, alpha);
    return finalize_probability(std::norm(state(static_cast<int>(beta))),
                                "probability_via_propagation");
}

Eigen::Vector3d probabilities_closed_form(const OscParams& p, const Baseline& b, Flavor alpha) {
    Eigen::Vector3d out;
    out << probability_closed_form(p, b, alpha, Flavor::e),
        probability_closed_form(p, b, alpha, Flavor::mu),
        probability_closed_form(p, b, alpha, Flavor::tau);
    return out;
}

}  // namespace nuosc

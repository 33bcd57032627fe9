#pragma once

#include <Eigen/Dense>

#include "nuosc/gates.hpp"

namespace nuosc {

/// Cartan (KAK) form of a two-qubit unitary:
///   U = e^{i phase} (k1l (x) k1r) · N(a, b, c) · (k2l (x) k2r)
/// with N(a, b, c) = exp(i (a XX + b YY + c ZZ)) and canonical coordinates in
/// the Weyl chamber pi/4 >= a >= b >= |c|, normalized to c >= 0 on the
/// a = pi/4 boundary where (a, b, c) and (a, b, -c) describe the same class.
struct WeylDecomposition {
    Matrix2 k1l, k1r;  // local factors after the canonical gate
    double a = 0.0, b = 0.0, c = 0.0;
    Matrix2 k2l, k2r;  // local factors before the canonical gate
    double phase = 0.0;
};

/// exp(i (a XX + b YY + c ZZ)).
Matrix4 canonical_matrix(double a, double b, double c);

/// Decomposes a unitary 4x4 matrix. Throws std::domain_error when the input
/// deviates from unitarity by more than 1e-10.
WeylDecomposition weyl_decompose(const Matrix4& unitary);

/// Splits a Kronecker product of single-qubit unitaries:
///   input = e^{i phase} (l (x) r) with det l = det r = 1.
/// Throws std::domain_error when the input is not a tensor product.
struct KronFactors {
    Matrix2 l, r;
    double phase = 0.0;
};
KronFactors factor_kron(const Matrix4& product);

/// Reassembles the decomposition (mainly for tests).
Matrix4 weyl_reconstruct(const WeylDecomposition& d);

/// max_phi-minimized max-norm distance ||U - e^{i phi} W||_max, the gauge in
/// which synthesized circuits are compared.
double phase_aligned_distance(const Matrix4& u, const Matrix4& w);

}  // namespace nuosc

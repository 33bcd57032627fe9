#pragma once

#include "nuosc/gates.hpp"
#include "nuosc/weyl.hpp"

namespace nuosc {

/// Compiles a two-qubit unitary into CNOTs plus single-qubit rotations via
/// the Cartan decomposition. The circuit reproduces the input up to global
/// phase with max-entry error <= 1e-9. CNOT usage by canonical class:
///   (0,0,0) local ........... 0
///   (pi/4,0,0) CNOT class ... 1
///   (a,b,0) ................. 2
///   generic ................. 3
/// Throws std::domain_error for non-unitary input (tolerance 1e-10).
Circuit synthesize(const Matrix4& unitary);

/// ZYZ Euler factorization of a single-qubit unitary as gates on `target`,
/// global phase discarded. Near-zero rotations are dropped.
Circuit zyz_gates(const Matrix2& u, int target);

}  // namespace nuosc

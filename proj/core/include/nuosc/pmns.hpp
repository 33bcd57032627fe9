#pragma once

#include <Eigen/Dense>

#include "nuosc/osc_params.hpp"

namespace nuosc {

using Matrix3 = Eigen::Matrix3cd;
using Vector3 = Eigen::Vector3cd;

/// 3x3 unitary mixing matrix between flavor and mass eigenstates,
/// parameterized by three angles and the CP phase (product of the theta23
/// block, the theta13/delta block and the theta12 block, in that order).
/// Real for delta = 0. For antineutrinos the matrix is conjugated.
Matrix3 build_pmns(const OscParams& params);

/// Mass-basis propagation phases diag(1, e^{-i phi21}, e^{-i phi31}) with
/// phi_ij = kPhasePerEv2KmGeV * dm2_ij * L/E. Throws std::domain_error for
/// E <= 0.
Matrix3 vacuum_phase_matrix(const OscParams& params, const Baseline& baseline);

/// Flavor-basis evolution U M(t) U^dag applied to the initial flavor state.
/// `initial` must be an active flavor. Norm is preserved.
Vector3 propagate(const OscParams& params, const Baseline& baseline, Flavor initial);

/// Oscillation probability from the double mixing-matrix sum
/// sum_ij U*_ai U_bi U_aj U*_bj e^{-i phi_ij}. The imaginary residual must
/// stay below 1e-9 (asserted); tiny negative real parts (> -1e-9) are
/// clamped into [0, 1].
double probability_closed_form(const OscParams& params, const Baseline& baseline,
                               Flavor alpha, Flavor beta);

/// Same probability through the matrix-propagation path; cross-validates the
/// closed form (the two agree to 1e-12).
double probability_via_propagation(const OscParams& params, const Baseline& baseline,
                                   Flavor alpha, Flavor beta);

/// All three final-flavor probabilities for one initial flavor, closed form.
Eigen::Vector3d probabilities_closed_form(const OscParams& params, const Baseline& baseline,
                                          Flavor alpha);

}  // namespace nuosc

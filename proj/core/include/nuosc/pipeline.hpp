#pragma once

#include <Eigen/Dense>

#include "nuosc/gates.hpp"
#include "nuosc/matter.hpp"
#include "nuosc/osc_params.hpp"
#include "nuosc/pmns.hpp"

namespace nuosc {

/// Basis mapping of the two-qubit embedding: nu_e -> |00>, nu_mu -> |01>,
/// nu_tau -> |10>, nu_chi -> |11> (sterile, decoupled).

/// 4x4 mixing matrix with the sterile row/column pinned to the unit vector.
Matrix4 embed_pmns(const Matrix3& u);

/// Choice of the free phase on the sterile diagonal entry. `Sum` picks
/// Phi_ab = phi21 + phi31, which factors the evolution into two single-qubit
/// phase gates exactly; the choice never affects active-flavor observables.
struct PhiAbPolicy {
    enum Kind { Sum, Zero, Custom } kind = Sum;
    double custom_value = 0.0;

    static PhiAbPolicy sum() { return {Sum, 0.0}; }
    static PhiAbPolicy zero() { return {Zero, 0.0}; }
    static PhiAbPolicy custom(double v) { return {Custom, v}; }
};

/// diag(1, e^{-i phi21}, e^{-i phi31}, e^{-i Phi_ab}).
Matrix4 phase_matrix4(const OscParams& params, const Baseline& baseline,
                      PhiAbPolicy policy = PhiAbPolicy::sum());

/// The two-phase-gate realization of phase_matrix4 under the Sum policy:
/// Phase(-phi31) on qubit 0 and Phase(-phi21) on qubit 1.
Circuit phase_circuit(const OscParams& params, const Baseline& baseline);

/// Full flavor-evolution unitary U4 M4 U4^dag.
Matrix4 pipeline_unitary(const OscParams& params, const Baseline& baseline,
                         PhiAbPolicy policy = PhiAbPolicy::sum());

/// Gate realization of the evolution: synth(U4^dag), the two phase gates,
/// synth(U4), concatenated and simplified.
Circuit pipeline_circuit(const OscParams& params, const Baseline& baseline);

enum class PipelineBackend { Matrix, Circuit };

/// Probabilities of all four basis states after evolving an active initial
/// flavor; the sterile component stays at zero.
Eigen::Vector4d run_pipeline(const OscParams& params, const Baseline& baseline, Flavor initial,
                             PipelineBackend backend,
                             PhiAbPolicy policy = PhiAbPolicy::sum());

/// Matter variant: evolves with the matter-modified parameters through the
/// identical circuit machinery.
Eigen::Vector4d run_pipeline_matter(const OscParams& params, const MatterContext& ctx,
                                    double L_km, Flavor initial, PipelineBackend backend);

}  // namespace nuosc

#pragma once

#include <Eigen/Dense>

#include "nuosc/osc_params.hpp"
#include "nuosc/pmns.hpp"

namespace nuosc {

/// How the dimensionless matter strength a [eV²] is derived from the
/// potential V [eV] and energy E [GeV]. `PaperOperative` is a = V·E, the
/// operational shorthand that puts V ~ 1e-4 eV at resonance scale;
/// `Literal2EV` keeps the printed factor two, a = 2·V·E. Both feed the exact
/// Hamiltonian and the perturbative parameters identically, so the two
/// propagation modes always share one convention.
enum class AConvention { PaperOperative, Literal2EV };

/// Constant-density matter context: energy, Wolfenstein-style potential and
/// the active a-convention. V >= 0, E > 0.
struct MatterContext {
    double E_GeV = 0.5;
    double V_eV = 0.0;
    AConvention convention = AConvention::PaperOperative;

    MatterContext() = default;
    MatterContext(double E, double V, AConvention conv = AConvention::PaperOperative)
        : E_GeV(E), V_eV(V), convention(conv) {
        if (!(E_GeV > 0.0)) throw std::domain_error("MatterContext: E must be > 0");
        if (V_eV < 0.0) throw std::domain_error("MatterContext: V must be >= 0");
    }

    /// Matter strength a in eV² under the active convention.
    double a() const {
        return convention == AConvention::PaperOperative ? V_eV * E_GeV : 2.0 * V_eV * E_GeV;
    }
};

/// Matter-modified mixing parameters and splittings.
///
/// The intermediate phi13 is the *difference* between the matter and vacuum
/// 1-3 angles, phi13 = theta13_t - theta13. The alternative reading
/// phi13 = theta13_t makes eps1 nonzero at V = 0 (it leaves a
/// (dm2_ee/dm2_21)·sin²theta13 ≈ 0.75 offset) and destroys the vacuum limit,
/// so it is not used. Likewise the theta12_t denominator uses cos(2 phi13) —
/// the same radicand that rescales dm2_21 — because
/// cos 2theta12_t = (cos 2theta12 - eps1) · dm2_21 / dm2_21_t must hold
/// structurally; a sin(2 phi13) there collapses theta12_t to 0 in vacuum.
/// Exact-diagonalization cross-checks in the test suite pin both choices.
struct EffectiveParams {
    double theta12_t = 0.0;
    double theta13_t = 0.0;
    double theta23_t = 0.0;  // == theta23
    double delta_t = 0.0;    // == delta
    double dm2_21_t = 0.0;
    double dm2_31_t = 0.0;
    double eps1 = 0.0;
    double eps2 = 0.0;
    double dm2_ee = 0.0;
    double phi13 = 0.0;
    /// Set when a >= dm2_ee (resonance-crossing regime); values are still
    /// returned, the perturbative expansion is just less trustworthy there.
    bool resonance_crossed = false;

    OscParams as_osc_params(const OscParams& vacuum) const {
        OscParams p = vacuum;
        p.theta12 = theta12_t;
        p.theta13 = theta13_t;
        p.theta23 = theta23_t;
        p.delta = delta_t;
        p.dm2_21 = dm2_21_t;
        p.dm2_31 = dm2_31_t;
        return p;
    }
};

/// Spectrum of the flavor Hamiltonian: ascending eigenvalues in eV²/GeV and
/// the unitary of column eigenvectors, phase-fixed so the largest-magnitude
/// component of each column is real positive.
struct MatterSpectrum {
    Eigen::Vector3d eigenvalues;
    Matrix3 mixing;
};

/// Flavor-basis Hamiltonian in eV²/GeV:
///   H = (1/2E) (U diag(0, dm2_21, dm2_31) U^dag + diag(a, 0, 0)).
/// Carrying a (rather than the raw V entry) keeps the exact and perturbative
/// paths on the same convention; under Literal2EV the potential entry equals
/// V, under PaperOperative it is V/2.
Matrix3 matter_hamiltonian(const OscParams& params, const MatterContext& ctx);

/// Exact spectrum of a Hermitian 3x3 matrix with deterministic eigenvector
/// phases. Throws std::domain_error when the Hermiticity residual exceeds
/// 1e-10.
MatterSpectrum exact_diagonalize(const Matrix3& hamiltonian);

/// Perturbative matter-modified angles and splittings (two-step rotation
/// scheme; see EffectiveParams for the phi13 and trig conventions).
EffectiveParams approx_effective_params(const OscParams& params, const MatterContext& ctx);

enum class MatterMode { Exact, Approx };

/// Oscillation probability in constant-density matter over L_km.
/// Approx mode rebuilds the mixing matrix from the effective parameters and
/// reuses the vacuum machinery; exact mode evolves with the diagonalized
/// Hamiltonian. Both preserve unitarity.
double matter_probability(const OscParams& params, const MatterContext& ctx, double L_km,
                          Flavor alpha, Flavor beta, MatterMode mode);

/// All three final-flavor probabilities for one initial flavor.
Eigen::Vector3d matter_probabilities(const OscParams& params, const MatterContext& ctx,
                                     double L_km, Flavor alpha, MatterMode mode);

}  // namespace nuosc

#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "nuosc/gates.hpp"

namespace nuosc {

/// Two-qubit density matrix: Hermitian, unit trace, positive semidefinite
/// (eigenvalues >= -1e-10 tolerated as rounding).
struct DensityMatrix {
    Matrix4 rho;

    static DensityMatrix from_state(const Vector4& psi);
    static DensityMatrix maximally_mixed();

    /// Throws std::domain_error when Hermiticity/trace/PSD are violated.
    void validate() const;
};

/// Thermal polarization of the pseudo-pure preparation, 0 < eta <= 1.
struct PpsParams {
    double eta = 1e-5;
};

/// Pseudo-pure state (1 - eta)/4 · I + eta · |00><00|.
DensityMatrix pps_state(const PpsParams& params);

/// Uhlmann-Jozsa fidelity (Tr sqrt(sqrt(rho_th) rho_exp sqrt(rho_th)))².
/// Symmetric in its arguments; throws std::domain_error for non-PSD input.
double fidelity(const DensityMatrix& rho_th, const DensityMatrix& rho_exp);

/// Acquisition pulse applied before signal readout: a pi/2 y-rotation on the
/// first (YI) or second (IY) qubit. The rotation convention is
/// R = [[1, -1], [1, 1]]/sqrt(2). In the 2x2 block decomposition
/// rho = [[A, B], [B^dag, D]] the YI map gives (R (x) I) rho (R (x) I)^dag
/// with off-diagonal block (A - D + B - B^dag)/2, whose real diagonal is
/// (Re A - Re D)/2 because B - B^dag is anti-Hermitian; hence
/// Re rho^1_13 = (rho11 - rho33)/2 and Re rho^1_24 = (rho22 - rho44)/2,
/// which is what the population-recovery formulas below invert. The
/// opposite sign convention flips these terms and breaks the identity.
enum class AcquisitionPulse { YI, IY };

DensityMatrix acquisition_map(const DensityMatrix& rho, AcquisitionPulse pulse);

/// Absorption-mode line intensities: real parts of the (1,3)/(2,4) elements
/// after YI and the (1,2)/(3,4) elements after IY (1-based element names).
struct SpectralReadout {
    double r1_13 = 0.0;
    double r1_24 = 0.0;
    double r2_12 = 0.0;
    double r2_34 = 0.0;
    double sigma = 0.0;  // additive noise applied, 0 for exact readout
};

/// Noiseless readout of the four spectral values.
SpectralReadout readout(const DensityMatrix& rho);

/// Readout with zero-mean Gaussian noise of deviation sigma on each spectral
/// value; deterministic for a fixed seed (private generator per call).
SpectralReadout noisy_readout(const DensityMatrix& rho, double sigma, std::uint64_t seed);

/// Recovered populations and their [0,1]-clamped companions:
///   rho11 = (1 + 2(r1_13 + r1_24) + 4 r2_12)/4
///   rho22 = (1 + 2(r1_13 + r1_24) - 4 r2_12)/4
///   rho33 = (1 - 2(r1_13 + r1_24) + 4 r2_34)/4
/// Noiseless readouts reproduce the exact diagonal.
struct ExtractedProbabilities {
    double p_e = 0.0, p_mu = 0.0, p_tau = 0.0;        // raw
    double p_e_clamped = 0.0, p_mu_clamped = 0.0, p_tau_clamped = 0.0;
};

ExtractedProbabilities extract_probabilities(const SpectralReadout& r);

}  // namespace nuosc

#pragma once

#include <numbers>
#include <stdexcept>

namespace nuosc {

/// Conversion from Δm²[eV²]·L[km]/E[GeV] to an oscillation phase in radians,
/// using the rounded 2·1.27 factor common to long-baseline plots. This is the
/// single place the conversion lives; matter propagation reuses it.
inline constexpr double kPhasePerEv2KmGeV = 2.0 * 1.27;

inline constexpr double deg_to_rad(double deg) {
    return deg * std::numbers::pi / 180.0;
}

/// The six physical oscillation parameters. Angles and the CP phase are in
/// radians, mass-squared splittings in eV². Both mass orderings are allowed
/// (dm2_31 may be negative). `antineutrino` conjugates the mixing matrix,
/// which is equivalent to delta -> -delta.
struct OscParams {
    double theta12 = deg_to_rad(33.45);
    double theta13 = deg_to_rad(8.62);
    double theta23 = deg_to_rad(42.1);
    double delta = 0.0;
    double dm2_21 = 7.42e-5;
    double dm2_31 = 2.510e-3;
    bool antineutrino = false;

    /// dm2_32 = dm2_31 - dm2_21 by construction.
    double dm2_32() const { return dm2_31 - dm2_21; }

    OscParams with_delta(double d) const {
        OscParams p = *this;
        p.delta = d;
        return p;
    }
};

/// Propagation distance and neutrino energy. E must be positive; L/E in
/// km/GeV is the natural sweep variable.
struct Baseline {
    double L_km = 0.0;
    double E_GeV = 1.0;

    Baseline() = default;
    Baseline(double L, double E) : L_km(L), E_GeV(E) {
        if (!(E_GeV > 0.0)) throw std::domain_error("Baseline: E must be > 0");
        if (L_km < 0.0) throw std::domain_error("Baseline: L must be >= 0");
    }

    static Baseline from_l_over_e(double l_over_e, double E = 1.0) {
        return Baseline(l_over_e * E, E);
    }

    double l_over_e() const { return L_km / E_GeV; }
};

/// Flavor basis index. `chi` is the decoupled sterile state and is only
/// meaningful in the two-qubit (4-dimensional) embedding.
enum class Flavor : int { e = 0, mu = 1, tau = 2, chi = 3 };

inline constexpr bool is_active(Flavor f) { return f != Flavor::chi; }

inline const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::e: return "e";
        case Flavor::mu: return "mu";
        case Flavor::tau: return "tau";
        case Flavor::chi: return "chi";
    }
    return "?";
}

}  // namespace nuosc

#pragma once

#include <Eigen/Dense>
#include <random>

#include "nuosc/gates.hpp"
#include "nuosc/nmr.hpp"

namespace nuosc {

/// Haar-distributed unitary from a seeded generator (Ginibre + QR with the
/// R-diagonal phase fix). Deterministic for a fixed generator state.
template <int N>
Eigen::Matrix<std::complex<double>, N, N> random_unitary(std::mt19937_64& gen) {
    std::normal_distribution<double> dist;
    Eigen::Matrix<std::complex<double>, N, N> z;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) z(i, j) = std::complex<double>(dist(gen), dist(gen));
    Eigen::HouseholderQR<decltype(z)> qr(z);
    Eigen::Matrix<std::complex<double>, N, N> q = qr.householderQ();
    const auto r = qr.matrixQR().template triangularView<Eigen::Upper>();
    for (int j = 0; j < N; ++j) {
        const std::complex<double> d = r(j, j);
        q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : 1.0;
    }
    return q;
}

inline Matrix4 random_unitary4(std::mt19937_64& gen) { return random_unitary<4>(gen); }
inline Matrix2 random_unitary2(std::mt19937_64& gen) { return random_unitary<2>(gen); }

/// Full-rank random density matrix (normalized Wishart draw).
inline DensityMatrix random_density_matrix(std::mt19937_64& gen) {
    std::normal_distribution<double> dist;
    Matrix4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = std::complex<double>(dist(gen), dist(gen));
    Matrix4 rho = a * a.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix{(rho + rho.adjoint()) / 2.0};
}

/// Haar-random pure state.
inline Vector4 random_pure_state(std::mt19937_64& gen) {
    std::normal_distribution<double> dist;
    Vector4 psi;
    for (int i = 0; i < 4; ++i) psi(i) = std::complex<double>(dist(gen), dist(gen));
    return psi / psi.norm();
}

}  // namespace nuosc

#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include <numbers>
#include <random>

#include "nuosc/random.hpp"
#include "nuosc/synthesis.hpp"
#include "nuosc/weyl.hpp"

using namespace nuosc;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi4 = kPi / 4.0;

Matrix4 cnot01() {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = m(1, 1) = 1.0;
    m(2, 3) = m(3, 2) = 1.0;
    return m;
}

Matrix4 swap_gate() {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = m(3, 3) = 1.0;
    m(1, 2) = m(2, 1) = 1.0;
    return m;
}

void check_chamber(const WeylDecomposition& d) {
    CHECK(d.a <= kPi4 + 1e-12);
    CHECK(d.a >= d.b - 1e-12);
    CHECK(d.b >= std::abs(d.c) - 1e-12);
    CHECK(d.b >= -1e-12);
}

/// Independent class oracle: the eigenphases of B^dag U B (B^dag U B)^T for
/// class (a,b,c) are {a-b+c, -a+b+c, a+b-c, -a-b-c} doubled. Compares the
/// multiset of eigenvalues, using a general-purpose complex eigensolver
/// rather than the joint-diagonalization route inside weyl_decompose.
void check_invariant_spectrum(const Matrix4& u, double a, double b, double c) {
    using namespace std::complex_literals;
    Matrix4 magic;
    magic << 1, 1i, 0, 0,
        0, 0, 1i, 1,
        0, 0, 1i, -1,
        1, -1i, 0, 0;
    const Matrix4 su = u * std::pow(u.determinant(), -0.25);
    const Matrix4 m = (magic.adjoint() / 2.0) * su * magic;
    const Matrix4 gram = m.transpose() * m;
    Eigen::ComplexEigenSolver<Matrix4> solver(gram);
    std::vector<std::complex<double>> expected = {
        std::exp(2i * (a - b + c)), std::exp(2i * (-a + b + c)),
        std::exp(2i * (a + b - c)), std::exp(2i * (-a - b - c))};
    std::vector<std::complex<double>> got(solver.eigenvalues().data(),
                                          solver.eigenvalues().data() + 4);
    // the determinant normalization leaves a possible global sign on all four
    for (const double sign : {1.0, -1.0}) {
        auto remaining = got;
        bool all_found = true;
        for (const auto& e : expected) {
            auto it = std::min_element(remaining.begin(), remaining.end(),
                                       [&](const auto& x, const auto& y) {
                                           return std::abs(x - sign * e) < std::abs(y - sign * e);
                                       });
            if (it == remaining.end() || std::abs(*it - sign * e) > 1e-9) {
                all_found = false;
                break;
            }
            remaining.erase(it);
        }
        if (all_found) {
            CHECK(all_found);
            return;
        }
    }
    CHECK_MESSAGE(false, "invariant spectrum mismatch");
}

}  // namespace

TEST_CASE("weyl_decompose: reconstruction and chamber on random unitaries") {
    std::mt19937_64 gen(42);
    for (int i = 0; i < 300; ++i) {
        const Matrix4 u = random_unitary4(gen);
        const WeylDecomposition d = weyl_decompose(u);
        CHECK((weyl_reconstruct(d) - u).cwiseAbs().maxCoeff() <= 1e-11);
        check_chamber(d);
    }
}

TEST_CASE("weyl_decompose: coordinates are invariant under local gates") {
    std::mt19937_64 gen(43);
    for (int i = 0; i < 100; ++i) {
        const Matrix4 u = random_unitary4(gen);
        const WeylDecomposition base = weyl_decompose(u);
        const Matrix4 dressed = Eigen::kroneckerProduct(random_unitary2(gen), random_unitary2(gen)) *
                                u *
                                Eigen::kroneckerProduct(random_unitary2(gen), random_unitary2(gen));
        const WeylDecomposition d = weyl_decompose(dressed);
        CHECK(std::abs(d.a - base.a) < 1e-9);
        CHECK(std::abs(d.b - base.b) < 1e-9);
        CHECK(std::abs(d.c - base.c) < 1e-9);
    }
}

TEST_CASE("weyl_decompose: named gate classes") {
    const WeylDecomposition id = weyl_decompose(Matrix4::Identity());
    CHECK(std::abs(id.a) < 1e-12);
    CHECK(std::abs(id.b) < 1e-12);
    CHECK(std::abs(id.c) < 1e-12);

    const WeylDecomposition cx = weyl_decompose(cnot01());
    CHECK(cx.a == doctest::Approx(kPi4).epsilon(1e-12));
    CHECK(std::abs(cx.b) < 1e-12);
    CHECK(std::abs(cx.c) < 1e-12);

    const WeylDecomposition sw = weyl_decompose(swap_gate());
    CHECK(sw.a == doctest::Approx(kPi4).epsilon(1e-12));
    CHECK(sw.b == doctest::Approx(kPi4).epsilon(1e-12));
    CHECK(sw.c == doctest::Approx(kPi4).epsilon(1e-12));
    check_invariant_spectrum(swap_gate(), sw.a, sw.b, sw.c);
    check_invariant_spectrum(cnot01(), cx.a, cx.b, cx.c);
}

TEST_CASE("weyl_decompose: rejects non-unitary input") {
    Matrix4 bad = Matrix4::Identity();
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(weyl_decompose(bad), std::domain_error);
    CHECK_THROWS_AS(synthesize(bad), std::domain_error);
}

TEST_CASE("factor_kron: recovers tensor factors, rejects entangling input") {
    std::mt19937_64 gen(44);
    for (int i = 0; i < 100; ++i) {
        const Matrix2 l = random_unitary2(gen);
        const Matrix2 r = random_unitary2(gen);
        const Matrix4 prod = Eigen::kroneckerProduct(l, r);
        const KronFactors f = factor_kron(prod);
        const Matrix4 rebuilt =
            std::exp(std::complex<double>(0, f.phase)) * Eigen::kroneckerProduct(f.l, f.r).eval();
        CHECK((rebuilt - prod).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK_THROWS_AS(factor_kron(cnot01()), std::domain_error);
}

TEST_CASE("synthesize: identity and named gates hit their CNOT budgets") {
    const Circuit empty = synthesize(Matrix4::Identity());
    CHECK(empty.gates.empty());

    const Circuit one = synthesize(cnot01());
    CHECK(one.cnot_count() == 1);
    CHECK(phase_aligned_distance(cnot01(), circuit_unitary(one)) <= 1e-9);

    const Circuit three = synthesize(swap_gate());
    CHECK(three.cnot_count() == 3);
    CHECK(phase_aligned_distance(swap_gate(), circuit_unitary(three)) <= 1e-9);

    Matrix4 cz = Matrix4::Identity();
    cz(3, 3) = -1.0;
    const Circuit one_cz = synthesize(cz);
    CHECK(one_cz.cnot_count() == 1);
    CHECK(phase_aligned_distance(cz, circuit_unitary(one_cz)) <= 1e-9);

    Matrix4 iswap = Matrix4::Zero();
    iswap(0, 0) = iswap(3, 3) = 1.0;
    iswap(1, 2) = iswap(2, 1) = std::complex<double>(0.0, 1.0);
    const Circuit two = synthesize(iswap);
    CHECK(two.cnot_count() == 2);
    CHECK(phase_aligned_distance(iswap, circuit_unitary(two)) <= 1e-9);

    // partial controlled-phase needs two CNOTs
    Matrix4 cphase = Matrix4::Identity();
    cphase(3, 3) = std::exp(std::complex<double>(0.0, 0.6));
    const Circuit partial = synthesize(cphase);
    CHECK(partial.cnot_count() == 2);
    CHECK(phase_aligned_distance(cphase, circuit_unitary(partial)) <= 1e-9);
}

TEST_CASE("synthesize: local products need no CNOT") {
    std::mt19937_64 gen(45);
    for (int i = 0; i < 50; ++i) {
        const Matrix4 local =
            Eigen::kroneckerProduct(random_unitary2(gen), random_unitary2(gen));
        const Circuit c = synthesize(local);
        CHECK(c.cnot_count() == 0);
        CHECK(phase_aligned_distance(local, circuit_unitary(c)) <= 1e-9);
    }
}

TEST_CASE("synthesize: random unitaries reconstruct within budget") {
    std::mt19937_64 gen(46);
    for (int i = 0; i < 300; ++i) {
        const Matrix4 u = random_unitary4(gen);
        const Circuit c = synthesize(u);
        CHECK(c.cnot_count() <= 3);
        CHECK(phase_aligned_distance(u, circuit_unitary(c)) <= 1e-9);
    }
}

TEST_CASE("synthesize: SWAP-adjacent boundary classes (negative c at a = pi/4)") {
    std::mt19937_64 gen(47);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double b = frac(gen) * kPi4;
        const double c = -frac(gen) * b;
        const Matrix4 n = canonical_matrix(kPi4, b, c);
        const Matrix4 u = Eigen::kroneckerProduct(random_unitary2(gen), random_unitary2(gen)) *
                          n *
                          Eigen::kroneckerProduct(random_unitary2(gen), random_unitary2(gen));
        const Circuit circ = synthesize(u);
        CHECK(phase_aligned_distance(u, circuit_unitary(circ)) <= 1e-9);
        CHECK(circ.cnot_count() <= 3);
    }
}

TEST_CASE("synthesize: partial-swap family and its adjoints") {
    for (double alpha = 0.05; alpha < 1.0; alpha += 0.09) {
        const Matrix4 n = canonical_matrix(alpha * kPi4, alpha * kPi4, alpha * kPi4);
        for (const Matrix4& u : {n, Matrix4(n.adjoint())}) {
            const Circuit c = synthesize(u);
            CHECK(phase_aligned_distance(u, circuit_unitary(c)) <= 1e-9);
            CHECK(c.cnot_count() <= 3);
        }
    }
}

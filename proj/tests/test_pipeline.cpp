#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include <random>

#include "nuosc/pipeline.hpp"
#include "nuosc/random.hpp"
#include "nuosc/weyl.hpp"
#include "test_util.hpp"

using namespace nuosc;
using nuosc::testing::random_baseline;
using nuosc::testing::random_params;

TEST_CASE("embed_pmns: block structure and unitarity") {
    CHECK((embed_pmns(Matrix3::Identity()) - Matrix4::Identity()).cwiseAbs().maxCoeff() == 0.0);

    std::mt19937_64 gen(5);
    for (int i = 0; i < 200; ++i) {
        const Matrix4 u4 = embed_pmns(build_pmns(random_params(gen)));
        CHECK((u4 * u4.adjoint() - Matrix4::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
        // sterile row/column stay pinned through products
        const Matrix4 chain = u4 * embed_pmns(build_pmns(random_params(gen))).adjoint() * u4;
        CHECK(std::abs(chain(3, 3) - 1.0) < 1e-12);
        for (int k = 0; k < 3; ++k) {
            CHECK(std::abs(chain(3, k)) < 1e-12);
            CHECK(std::abs(chain(k, 3)) < 1e-12);
        }
    }
}

TEST_CASE("phase_matrix4: identity at L = 0 and exact two-gate factorization") {
    const OscParams p;
    CHECK((phase_matrix4(p, Baseline(0.0, 1.0)) - Matrix4::Identity()).cwiseAbs().maxCoeff() <
          1e-15);

    for (double loe : {11.0, 250.0, 500.0, 777.0, 1600.0}) {
        const Baseline b = Baseline::from_l_over_e(loe);
        const Matrix4 m4 = phase_matrix4(p, b);
        const Matrix4 gates = circuit_unitary(phase_circuit(p, b));
        CHECK((m4 - gates).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("phase_matrix4: the sterile phase never leaks into active flavors") {
    std::mt19937_64 gen(6);
    std::uniform_real_distribution<double> phase(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const OscParams p = random_params(gen);
        const Baseline b = random_baseline(gen);
        const Eigen::Vector3d reference = probabilities_closed_form(p, b, Flavor::mu);
        for (PhiAbPolicy policy :
             {PhiAbPolicy::sum(), PhiAbPolicy::zero(), PhiAbPolicy::custom(phase(gen))}) {
            const Eigen::Vector4d out =
                run_pipeline(p, b, Flavor::mu, PipelineBackend::Matrix, policy);
            CHECK((out.head<3>() - reference).cwiseAbs().maxCoeff() <= 1e-10);
        }
    }
}

TEST_CASE("run_pipeline: sterile probability is zero and flavors match the 3x3 path") {
    std::mt19937_64 gen(8);
    for (int i = 0; i < 100; ++i) {
        const OscParams p = random_params(gen);
        const Baseline b = random_baseline(gen);
        for (Flavor initial : {Flavor::e, Flavor::mu, Flavor::tau}) {
            const Eigen::Vector4d probs = run_pipeline(p, b, initial, PipelineBackend::Matrix);
            CHECK(probs(3) <= 1e-12);
            CHECK((probs.head<3>() - probabilities_closed_form(p, b, initial))
                      .cwiseAbs()
                      .maxCoeff() <= 1e-10);
        }
    }
    CHECK_THROWS_AS(run_pipeline(OscParams{}, Baseline(0.0, 1.0), Flavor::chi,
                                 PipelineBackend::Matrix),
                    std::invalid_argument);
}

TEST_CASE("run_pipeline: circuit backend agrees with the matrix backend") {
    std::mt19937_64 gen(9);
    // 170 draws x 3 initial flavors > 500 configurations
    for (int i = 0; i < 170; ++i) {
        const OscParams p = random_params(gen);
        const Baseline b = random_baseline(gen);
        for (Flavor initial : {Flavor::e, Flavor::mu, Flavor::tau}) {
            const Eigen::Vector4d pm = run_pipeline(p, b, initial, PipelineBackend::Matrix);
            const Eigen::Vector4d pc = run_pipeline(p, b, initial, PipelineBackend::Circuit);
            CHECK((pm - pc).cwiseAbs().maxCoeff() <= 1e-9);
            CHECK(pc(3) <= 1e-12);
        }
    }
}

TEST_CASE("pipeline_circuit: stays within the four-CNOT-per-mixing budget") {
    std::mt19937_64 gen(10);
    for (int i = 0; i < 30; ++i) {
        const OscParams p = random_params(gen);
        const Baseline b = random_baseline(gen);
        const Circuit c = pipeline_circuit(p, b);
        CHECK(c.cnot_count() <= 6);  // two mixing-matrix synths, three each
        const Matrix4 expected = pipeline_unitary(p, b);
        CHECK(phase_aligned_distance(expected, circuit_unitary(c)) <= 1e-9);
    }
}

TEST_CASE("run_pipeline_matter: reduces to the matter probabilities") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> pot(0.0, 1e-4);
    std::uniform_real_distribution<double> loe(0.0, 1600.0);
    for (int i = 0; i < 50; ++i) {
        const OscParams p = random_params(gen);
        const MatterContext ctx(0.5, pot(gen));
        const double L = loe(gen) * ctx.E_GeV;
        const Eigen::Vector4d probs =
            run_pipeline_matter(p, ctx, L, Flavor::mu, PipelineBackend::Matrix);
        const Eigen::Vector3d expected =
            matter_probabilities(p, ctx, L, Flavor::mu, MatterMode::Approx);
        CHECK((probs.head<3>() - expected).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(probs(3) <= 1e-12);
    }
}

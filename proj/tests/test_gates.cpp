#include <doctest.h>

#include <random>

#include "nuosc/gates.hpp"

using namespace nuosc;

namespace {

Circuit random_circuit(std::mt19937_64& gen, int n_gates) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<int> qubit(0, 1);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    Circuit c;
    for (int i = 0; i < n_gates; ++i) {
        const int target = qubit(gen);
        switch (kind(gen)) {
            case 0: c.append(Gate::rx(target, angle(gen))); break;
            case 1: c.append(Gate::ry(target, angle(gen))); break;
            case 2: c.append(Gate::rz(target, angle(gen))); break;
            case 3: c.append(Gate::phase(target, angle(gen))); break;
            default: c.append(Gate::cnot(target, 1 - target)); break;
        }
    }
    return c;
}

}  // namespace

TEST_CASE("circuit_unitary: empty circuit and inverse rotation pairs") {
    CHECK((circuit_unitary(Circuit{}) - Matrix4::Identity()).cwiseAbs().maxCoeff() == 0.0);

    Circuit c;
    c.append(Gate::rz(0, 0.7));
    c.append(Gate::rz(0, -0.7));
    CHECK((circuit_unitary(c) - Matrix4::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(simplify(c).gates.empty());
}

TEST_CASE("circuit_unitary: matches gate-by-gate state application") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit c = random_circuit(gen, 20);
        const Matrix4 u = circuit_unitary(c);
        CHECK((u * u.adjoint() - Matrix4::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
        for (int basis = 0; basis < 4; ++basis) {
            Vector4 e = Vector4::Zero();
            e(basis) = 1.0;
            const Vector4 via_state = apply_circuit(c, e);
            CHECK((via_state - u.col(basis)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("gate constructors enforce qubit constraints") {
    CHECK_THROWS_AS(gate_unitary(Gate::cnot(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(gate_unitary(Gate::rx(2, 0.5)), std::invalid_argument);
}

TEST_CASE("simplify: merges rotations, cancels CNOT pairs, drops null angles") {
    Circuit c;
    c.append(Gate::ry(1, 0.25));
    c.append(Gate::ry(1, 0.50));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::rz(0, 1e-15));
    const Circuit s = simplify(c);
    REQUIRE(s.gates.size() == 1);
    CHECK(s.gates[0].kind == GateKind::Ry);
    CHECK(s.gates[0].angle == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(s.cnot_count() == 0);

    // merging must preserve the unitary
    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit raw = random_circuit(gen, 12);
        const Matrix4 u = circuit_unitary(raw);
        const Matrix4 v = circuit_unitary(simplify(raw));
        CHECK((u - v).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("serialization: exact decimal round trip") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Circuit c = random_circuit(gen, 15);
        const Circuit back = parse_circuit(serialize(c));
        REQUIRE(back.gates.size() == c.gates.size());
        for (std::size_t i = 0; i < c.gates.size(); ++i) {
            CHECK(back.gates[i].kind == c.gates[i].kind);
            CHECK(back.gates[i].target == c.gates[i].target);
            CHECK(back.gates[i].control == c.gates[i].control);
            CHECK(back.gates[i].angle == c.gates[i].angle);  // bit-exact
        }
    }
}

TEST_CASE("serialization: format and error paths") {
    Circuit c;
    c.append(Gate::cnot(0, 1));
    c.append(Gate::rz(1, 0.5));
    CHECK(serialize(c) == "CNOT 1 0\nRz 1 0.5\n");

    CHECK_THROWS_AS(parse_circuit("Hadamard 0 0.5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_circuit("Rz 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_circuit("Rz 0 notanumber\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_circuit("CNOT 1 1\n"), std::invalid_argument);
    CHECK(parse_circuit("").gates.empty());
}

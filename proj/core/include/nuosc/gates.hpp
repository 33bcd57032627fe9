#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nuosc {

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

/// Two-qubit convention used throughout: qubit 0 is the most significant bit
/// of the basis index, so |q0 q1> = |00>, |01>, |10>, |11> maps to 0..3 and a
/// gate G on qubit 0 acts as G (x) I.

enum class GateKind : std::uint8_t { Rx, Ry, Rz, Phase, Cnot };

/// One gate: rotations and Phase carry a target and an angle (radians),
/// CNOT carries target and control. Qubit indices are 0 or 1.
struct Gate {
    GateKind kind;
    int target = 0;
    int control = -1;   // CNOT only
    double angle = 0.0; // rotations and Phase only

    static Gate rx(int target, double angle) { return {GateKind::Rx, target, -1, angle}; }
    static Gate ry(int target, double angle) { return {GateKind::Ry, target, -1, angle}; }
    static Gate rz(int target, double angle) { return {GateKind::Rz, target, -1, angle}; }
    static Gate phase(int target, double angle) { return {GateKind::Phase, target, -1, angle}; }
    static Gate cnot(int control, int target) { return {GateKind::Cnot, target, control, 0.0}; }
};

Matrix2 rx_matrix(double angle);
Matrix2 ry_matrix(double angle);
Matrix2 rz_matrix(double angle);
Matrix2 phase_matrix(double angle);  // diag(1, e^{i angle})

/// Gate list applied left to right (gates[0] acts first).
struct Circuit {
    std::vector<Gate> gates;

    int cnot_count() const;
    int rotation_count() const;  // single-qubit gates, Phase included

    void append(const Gate& g) { gates.push_back(g); }
    void append(const Circuit& other);
};

/// 4x4 matrix of a single gate in the two-qubit space.
Matrix4 gate_unitary(const Gate& g);

/// Product of the gate matrices in application order; empty circuit yields
/// the identity.
Matrix4 circuit_unitary(const Circuit& c);

/// Gate-by-gate state-vector application (no intermediate 4x4 products).
Vector4 apply_circuit(const Circuit& c, const Vector4& state);

/// Merges adjacent same-kind single-qubit gates on the same target, cancels
/// adjacent CNOT pairs and drops rotations with |angle| < 1e-12.
Circuit simplify(const Circuit& c);

/// Line-oriented text format, one gate per line:
///   Rx|Ry|Rz|Phase <target> <angle>
///   CNOT <target> <control>
/// Floats print in shortest round-trip form, so serialize/parse is exact.
std::string serialize(const Circuit& c);
Circuit parse_circuit(const std::string& text);

}  // namespace nuosc

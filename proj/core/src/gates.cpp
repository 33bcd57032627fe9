#include "nuosc/gates.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cerrno>
#include <charconv>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace nuosc {

using std::complex;
using namespace std::complex_literals;

Matrix2 rx_matrix(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    Matrix2 m;
    m << c, -1i * s, -1i * s, c;
    return m;
}

Matrix2 ry_matrix(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    Matrix2 m;
    m << c, -s, s, c;
    return m;
}

Matrix2 rz_matrix(double t) {
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = std::exp(-1i * (t / 2));
    m(1, 1) = std::exp(1i * (t / 2));
    return m;
}

Matrix2 phase_matrix(double t) {
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = std::exp(1i * t);
    return m;
}

int Circuit::cnot_count() const {
    int n = 0;
    for (const Gate& g : gates) n += g.kind == GateKind::Cnot;
    return n;
}

int Circuit::rotation_count() const {
    int n = 0;
    for (const Gate& g : gates) n += g.kind != GateKind::Cnot;
    return n;
}

void Circuit::append(const Circuit& other) {
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

namespace {

void check_qubits(const Gate& g) {
    if (g.target < 0 || g.target > 1) throw std::invalid_argument("gate target out of range");
    if (g.kind == GateKind::Cnot) {
        if (g.control < 0 || g.control > 1) throw std::invalid_argument("CNOT control out of range");
        if (g.control == g.target) throw std::invalid_argument("CNOT control equals target");
    }
}

Matrix2 single_qubit_matrix(const Gate& g) {
    switch (g.kind) {
        case GateKind::Rx: return rx_matrix(g.angle);
        case GateKind::Ry: return ry_matrix(g.angle);
        case GateKind::Rz: return rz_matrix(g.angle);
        case GateKind::Phase: return phase_matrix(g.angle);
        case GateKind::Cnot: break;
    }
    throw std::logic_error("single_qubit_matrix: not a single-qubit gate");
}

}  // namespace

Matrix4 gate_unitary(const Gate& g) {
    check_qubits(g);
    if (g.kind == GateKind::Cnot) {
        Matrix4 m = Matrix4::Zero();
        if (g.control == 0) {  // control on MSB
            m(0, 0) = m(1, 1) = 1.0;
            m(2, 3) = m(3, 2) = 1.0;
        } else {
            m(0, 0) = m(3, 1) = 1.0;
            m(2, 2) = m(1, 3) = 1.0;
        }
        return m;
    }
    const Matrix2 u = single_qubit_matrix(g);
    if (g.target == 0) return Eigen::kroneckerProduct(u, Matrix2::Identity()).eval();
    return Eigen::kroneckerProduct(Matrix2::Identity(), u).eval();
}

Matrix4 circuit_unitary(const Circuit& c) {
    Matrix4 u = Matrix4::Identity();
    for (const Gate& g : c.gates) u = (gate_unitary(g) * u).eval();
    return u;
}

Vector4 apply_circuit(const Circuit& c, const Vector4& state) {
    Vector4 s = state;
    for (const Gate& g : c.gates) {
        check_qubits(g);
        if (g.kind == GateKind::Cnot) {
            if (g.control == 0)
                std::swap(s(2), s(3));
            else
                std::swap(s(1), s(3));
            continue;
        }
        const Matrix2 u = single_qubit_matrix(g);
        // stride over the untouched qubit
        const int stride = g.target == 0 ? 2 : 1;
        const int other = g.target == 0 ? 1 : 2;
        for (int base : {0, other}) {
            const complex<double> a = s(base), b = s(base + stride);
            s(base) = u(0, 0) * a + u(0, 1) * b;
            s(base + stride) = u(1, 0) * a + u(1, 1) * b;
        }
    }
    return s;
}

Circuit simplify(const Circuit& c) {
    std::vector<Gate> out;
    auto mergeable = [](const Gate& a, const Gate& b) {
        return a.kind == b.kind && a.target == b.target && a.kind != GateKind::Cnot;
    };
    auto push = [&](Gate g) {
        while (true) {
            if (out.empty()) break;
            Gate& prev = out.back();
            if (g.kind == GateKind::Cnot && prev.kind == GateKind::Cnot &&
                prev.control == g.control && prev.target == g.target) {
                out.pop_back();
                return;
            }
            if (mergeable(prev, g)) {
                g.angle += prev.angle;
                out.pop_back();
                continue;
            }
            break;
        }
        if (g.kind != GateKind::Cnot && std::abs(g.angle) < 1e-12) return;
        out.push_back(g);
    };
    for (const Gate& g : c.gates) push(g);
    return Circuit{std::move(out)};
}

namespace {

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::Rx: return "Rx";
        case GateKind::Ry: return "Ry";
        case GateKind::Rz: return "Rz";
        case GateKind::Phase: return "Phase";
        case GateKind::Cnot: return "CNOT";
    }
    return "?";
}

std::string shortest_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
    return std::string(buf, ptr);
}

}  // namespace

std::string serialize(const Circuit& c) {
    std::string out;
    for (const Gate& g : c.gates) {
        out += kind_name(g.kind);
        out += ' ';
        out += std::to_string(g.target);
        if (g.kind == GateKind::Cnot) {
            out += ' ';
            out += std::to_string(g.control);
        } else {
            out += ' ';
            out += shortest_double(g.angle);
        }
        out += '\n';
    }
    return out;
}

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind, field1, field2;
        if (!(ls >> kind >> field1 >> field2))
            throw std::invalid_argument("parse_circuit: malformed line " + std::to_string(lineno));
        Gate g{};
        if (kind == "Rx") g.kind = GateKind::Rx;
        else if (kind == "Ry") g.kind = GateKind::Ry;
        else if (kind == "Rz") g.kind = GateKind::Rz;
        else if (kind == "Phase") g.kind = GateKind::Phase;
        else if (kind == "CNOT") g.kind = GateKind::Cnot;
        else throw std::invalid_argument("parse_circuit: unknown gate '" + kind + "'");
        g.target = std::stoi(field1);
        if (g.kind == GateKind::Cnot) {
            g.control = std::stoi(field2);
        } else {
            const char* first = field2.data();
            const char* last = first + field2.size();
            auto [ptr, ec] = std::from_chars(first, last, g.angle);
            if (ec != std::errc{} || ptr != last)
                throw std::invalid_argument("parse_circuit: bad angle on line " + std::to_string(lineno));
        }
        check_qubits(g);
        c.gates.push_back(g);
    }
    return c;
}

}  // namespace nuosc

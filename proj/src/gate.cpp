#include "costembed/gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace costembed {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Arity {
    std::size_t targets;
    std::size_t controls;
};

Arity arity_of(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
        case GateKind::RZ:
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::PauliRotation:
            return {1, 0};
        case GateKind::ControlledPauli:
        case GateKind::CNOT:
        case GateKind::CZ:
            return {1, 1};
        case GateKind::CSWAP:
            return {2, 1};
    }
    throw std::logic_error("unknown gate kind");
}

Gate make(GateKind kind, std::vector<QubitIndex> targets, std::vector<QubitIndex> controls, Pauli p,
          std::optional<double> angle) {
    Gate g{kind, std::move(targets), std::move(controls), p, angle};
    g.validate();
    return g;
}

}  // namespace

bool Gate::is_rotation() const {
    return kind == GateKind::RX || kind == GateKind::RZ || kind == GateKind::PauliRotation;
}

Pauli Gate::generator() const {
    switch (kind) {
        case GateKind::RX:
            return Pauli::X;
        case GateKind::RZ:
            return Pauli::Z;
        case GateKind::PauliRotation:
        case GateKind::ControlledPauli:
            return pauli;
        default:
            throw std::logic_error(std::string("gate ") + std::string(to_string(kind)) + " has no Pauli generator");
    }
}

std::size_t Gate::min_register_width() const {
    std::size_t width = 0;
    for (auto q : targets) width = std::max(width, q + 1);
    for (auto q : controls) width = std::max(width, q + 1);
    return width;
}

Mat2 Gate::target_matrix() const {
    if (!is_bound()) {
        throw std::logic_error("rotation gate has no bound angle");
    }
    const double s = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::RX:
            return pauli_exponential(Pauli::X, *angle);
        case GateKind::RZ:
            return pauli_exponential(Pauli::Z, *angle);
        case GateKind::PauliRotation:
            return pauli_exponential(pauli, *angle);
        case GateKind::H:
            return {s, s, s, -s};
        case GateKind::X:
        case GateKind::CNOT:
            return pauli_matrix(Pauli::X);
        case GateKind::Z:
        case GateKind::CZ:
            return pauli_matrix(Pauli::Z);
        case GateKind::ControlledPauli:
            return pauli_matrix(pauli);
        case GateKind::CSWAP:
            break;
    }
    throw std::logic_error("CSWAP has no single-target matrix");
}

void Gate::validate() const {
    const Arity a = arity_of(kind);
    if (targets.size() != a.targets || controls.size() != a.controls) {
        throw std::invalid_argument(std::string("wrong number of qubits for ") + std::string(to_string(kind)));
    }
    std::vector<QubitIndex> all = targets;
    all.insert(all.end(), controls.begin(), controls.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument(std::string("repeated qubit in ") + std::string(to_string(kind)));
    }
}

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::RX: return "RX";
        case GateKind::RZ: return "RZ";
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::PauliRotation: return "PROT";
        case GateKind::ControlledPauli: return "CP";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::CSWAP: return "CSWAP";
    }
    return "?";
}

std::string_view to_string(Pauli p) {
    switch (p) {
        case Pauli::X: return "X";
        case Pauli::Y: return "Y";
        case Pauli::Z: return "Z";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_string(std::string_view s) {
    for (auto k : {GateKind::RX, GateKind::RZ, GateKind::H, GateKind::X, GateKind::Z, GateKind::PauliRotation,
                   GateKind::ControlledPauli, GateKind::CNOT, GateKind::CZ, GateKind::CSWAP}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::optional<Pauli> pauli_from_string(std::string_view s) {
    if (s == "X") return Pauli::X;
    if (s == "Y") return Pauli::Y;
    if (s == "Z") return Pauli::Z;
    return std::nullopt;
}

Mat2 pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::X: return {0.0, 1.0, 1.0, 0.0};
        case Pauli::Y: return {0.0, -kI, kI, 0.0};
        case Pauli::Z: return {1.0, 0.0, 0.0, -1.0};
    }
    throw std::logic_error("unknown Pauli");
}

Mat2 pauli_exponential(Pauli p, double theta) {
    // P^2 = I, so exp(i theta P) = cos(theta) I + i sin(theta) P.
    const Mat2 pm = pauli_matrix(p);
    const double c = std::cos(theta);
    const Complex is = kI * std::sin(theta);
    return {c + is * pm[0], is * pm[1], is * pm[2], c + is * pm[3]};
}

namespace gates {

Gate rx(QubitIndex q, std::optional<double> theta) { return make(GateKind::RX, {q}, {}, Pauli::X, theta); }
Gate rz(QubitIndex q, std::optional<double> theta) { return make(GateKind::RZ, {q}, {}, Pauli::Z, theta); }
Gate h(QubitIndex q) { return make(GateKind::H, {q}, {}, Pauli::X, std::nullopt); }
Gate x(QubitIndex q) { return make(GateKind::X, {q}, {}, Pauli::X, std::nullopt); }
Gate z(QubitIndex q) { return make(GateKind::Z, {q}, {}, Pauli::Z, std::nullopt); }
Gate pauli_rotation(Pauli p, QubitIndex q, std::optional<double> theta) {
    return make(GateKind::PauliRotation, {q}, {}, p, theta);
}
Gate controlled_pauli(Pauli p, QubitIndex control, QubitIndex target) {
    return make(GateKind::ControlledPauli, {target}, {control}, p, std::nullopt);
}
Gate cnot(QubitIndex control, QubitIndex target) {
    return make(GateKind::CNOT, {target}, {control}, Pauli::X, std::nullopt);
}
Gate cz(QubitIndex a, QubitIndex b) { return make(GateKind::CZ, {b}, {a}, Pauli::Z, std::nullopt); }
Gate cswap(QubitIndex control, QubitIndex a, QubitIndex b) {
    return make(GateKind::CSWAP, {a, b}, {control}, Pauli::X, std::nullopt);
}

}  // namespace gates

}  // namespace costembed

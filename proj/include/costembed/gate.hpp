#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "costembed/state.hpp"

namespace costembed {

enum class Pauli { X, Y, Z };

enum class GateKind {
    RX,
    RZ,
    H,
    X,
    Z,
    PauliRotation,
    ControlledPauli,
    CNOT,
    CZ,
    CSWAP,
};

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;

/// A gate application. Rotations carry an angle that may be left unbound
/// (`angle == std::nullopt`) until a parameter vector is bound to the circuit.
///
/// Rotation convention: every rotation is exp(i * angle * P) for its Pauli
/// generator P. RX is PauliRotation(X), RZ is PauliRotation(Z).
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<QubitIndex> targets;
    std::vector<QubitIndex> controls;
    Pauli pauli = Pauli::X;
    std::optional<double> angle;

    bool is_rotation() const;
    bool is_bound() const { return !is_rotation() || angle.has_value(); }

    /// Generator of a rotation or the controlled operator of ControlledPauli.
    Pauli generator() const;

    /// Highest qubit index touched plus one.
    std::size_t min_register_width() const;

    /// Single-target unitary acting on `targets[0]` when all `controls` are 1.
    /// Not defined for CSWAP. Throws std::logic_error on an unbound rotation.
    Mat2 target_matrix() const;

    /// Arity and disjointness check. Throws std::invalid_argument.
    void validate() const;

    bool operator==(const Gate &) const = default;
};

std::string_view to_string(GateKind kind);
std::string_view to_string(Pauli p);
std::optional<GateKind> gate_kind_from_string(std::string_view s);
std::optional<Pauli> pauli_from_string(std::string_view s);

Mat2 pauli_matrix(Pauli p);
/// exp(i * theta * P)
Mat2 pauli_exponential(Pauli p, double theta);

namespace gates {

Gate rx(QubitIndex q, std::optional<double> theta = std::nullopt);
Gate rz(QubitIndex q, std::optional<double> theta = std::nullopt);
Gate h(QubitIndex q);
Gate x(QubitIndex q);
Gate z(QubitIndex q);
Gate pauli_rotation(Pauli p, QubitIndex q, std::optional<double> theta = std::nullopt);
Gate controlled_pauli(Pauli p, QubitIndex control, QubitIndex target);
Gate cnot(QubitIndex control, QubitIndex target);
Gate cz(QubitIndex a, QubitIndex b);
Gate cswap(QubitIndex control, QubitIndex a, QubitIndex b);

}  // namespace gates

}  // namespace costembed

#pragma once

#include <vector>

#include "costembed/gate.hpp"
#include "costembed/state.hpp"

namespace costembed {

/// Global depolarizing channel rho -> lambda * rho + (1 - lambda) * I / 2^n.
struct DepolarizingChannel {
    double lambda = 1.0;
    std::size_t num_qubits = 0;
};

/// |psi'> = G|psi>. Throws std::out_of_range for a qubit index past the
/// register and std::logic_error for an unbound rotation.
StateVector apply_gate(const StateVector &psi, const Gate &gate);
/// rho' = G rho G^dagger
DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &gate);
QuantumState apply_gate(const QuantumState &state, const Gate &gate);

/// Kronecker product with `a` on the low qubits: qubit k of `a` stays qubit k,
/// qubit k of `b` becomes qubit a.num_qubits() + k.
StateVector tensor(const StateVector &a, const StateVector &b);
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);
/// Both operands must share a representation; throws std::invalid_argument otherwise.
QuantumState tensor(const QuantumState &a, const QuantumState &b);

/// Traces out every qubit not listed in `keep`. Kept qubit keep[k] becomes
/// qubit k of the result.
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<QubitIndex> &keep);

/// Probability of reading |1> on `qubit`.
double expectation_z(const StateVector &psi, QubitIndex qubit);
double expectation_z(const DensityMatrix &rho, QubitIndex qubit);
double expectation_z(const QuantumState &state, QubitIndex qubit);

DensityMatrix apply_depolarizing(const DensityMatrix &rho, const DepolarizingChannel &channel);

DensityMatrix to_density(const StateVector &psi);
DensityMatrix to_density(const QuantumState &state);

namespace detail {

// In-place forms used by the circuit runner.
void apply_gate_inplace(StateVector &psi, const Gate &gate);
void apply_gate_inplace(DensityMatrix &rho, const Gate &gate);
void depolarize_inplace(DensityMatrix &rho, double lambda);

}  // namespace detail

}  // namespace costembed

#include "costembed/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "costembed/sim.hpp"

namespace costembed {

void RegisterLayout::validate() const {
    std::vector<QubitIndex> all;
    for (const auto *role : {&data, &label, &index, &ancilla}) {
        all.insert(all.end(), role->begin(), role->end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] != i) {
            throw std::invalid_argument("register roles must be disjoint and cover qubits 0..n-1");
        }
    }
    if (std::find(data.begin(), data.end(), output) == data.end()) {
        throw std::invalid_argument("output qubit must be a data qubit");
    }
}

RegisterLayout make_layout(std::size_t num_data, std::size_t output_position, const RegisterOptions &opts) {
    if (output_position >= num_data) {
        throw std::invalid_argument("output position outside the data register");
    }
    RegisterLayout layout;
    QubitIndex next = 0;
    for (std::size_t i = 0; i < num_data; ++i) layout.data.push_back(next++);
    layout.label.push_back(next++);
    if (opts.ancilla) layout.ancilla.push_back(next++);
    for (std::size_t i = 0; i < opts.index_qubits; ++i) layout.index.push_back(next++);
    layout.output = layout.data[output_position];
    layout.validate();
    return layout;
}

std::string_view to_string(CostKind kind) { return kind == CostKind::Cnot ? "cnot" : "fredkin"; }

std::optional<CostKind> cost_kind_from_string(std::string_view s) {
    if (s == "cnot") return CostKind::Cnot;
    if (s == "fredkin") return CostKind::Fredkin;
    return std::nullopt;
}

Circuit::Circuit(RegisterLayout layout) : layout_(std::move(layout)) { layout_.validate(); }

void Circuit::append(Gate gate) {
    gate.validate();
    if (!gate.is_bound()) {
        throw std::invalid_argument("fixed gates need a bound angle; use append_parameterized");
    }
    if (gate.min_register_width() > num_qubits()) {
        throw std::out_of_range("gate addresses a qubit outside the register");
    }
    gates_.push_back(std::move(gate));
}

void Circuit::append_parameterized(Gate rotation, std::string slot_id) {
    rotation.validate();
    if (!rotation.is_rotation()) {
        throw std::invalid_argument("parameter slots must reference a rotation gate");
    }
    if (rotation.min_register_width() > num_qubits()) {
        throw std::out_of_range("gate addresses a qubit outside the register");
    }
    if (find_slot(slot_id) != nullptr) {
        throw std::invalid_argument("duplicate slot id " + slot_id);
    }
    rotation.angle.reset();
    slots_.push_back(ParamSlot{std::move(slot_id), gates_.size(), rotation.generator()});
    gates_.push_back(std::move(rotation));
}

void Circuit::insert(std::size_t position, Gate gate) {
    gate.validate();
    if (position > gates_.size()) {
        throw std::out_of_range("insert position past the end of the circuit");
    }
    if (!gate.is_bound()) {
        throw std::invalid_argument("inserted gates need a bound angle");
    }
    if (gate.min_register_width() > num_qubits()) {
        throw std::out_of_range("gate addresses a qubit outside the register");
    }
    gates_.insert(gates_.begin() + static_cast<std::ptrdiff_t>(position), std::move(gate));
    for (auto &slot : slots_) {
        if (slot.gate_position >= position) {
            ++slot.gate_position;
        }
    }
}

const ParamSlot *Circuit::find_slot(std::string_view id) const {
    auto it = std::find_if(slots_.begin(), slots_.end(), [&](const ParamSlot &s) { return s.id == id; });
    return it == slots_.end() ? nullptr : &*it;
}

std::optional<std::size_t> Circuit::slot_index(std::string_view id) const {
    auto it = std::find_if(slots_.begin(), slots_.end(), [&](const ParamSlot &s) { return s.id == id; });
    if (it == slots_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - slots_.begin());
}

QubitIndex Circuit::readout() const {
    if (probe_qubit_) return *probe_qubit_;
    if (cost_readout_) return *cost_readout_;
    return layout_.output;
}

void Circuit::add_qubit_to_ancilla(QubitIndex q) {
    layout_.ancilla.push_back(q);
    layout_.validate();
}

BoundCircuit Circuit::bind(const ParameterVector &params) const {
    if (params.size() != slots_.size()) {
        throw std::invalid_argument("parameter vector has " + std::to_string(params.size()) + " entries, circuit has " +
                                    std::to_string(slots_.size()) + " slots");
    }
    BoundCircuit bound{num_qubits(), gates_, readout()};
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        bound.gates[slots_[i].gate_position].angle = params[i];
    }
    return bound;
}

double gradient_from_probe(double probe_p1, double k) { return k * (1.0 - 2.0 * probe_p1); }

QuantumState simulate(const BoundCircuit &circuit, QuantumState input) {
    if (num_qubits(input) != circuit.num_qubits) {
        throw std::invalid_argument("input register width " + std::to_string(num_qubits(input)) +
                                    " does not match circuit width " + std::to_string(circuit.num_qubits));
    }
    std::visit(
        [&](auto &state) {
            for (const auto &g : circuit.gates) {
                detail::apply_gate_inplace(state, g);
            }
        },
        input);
    return input;
}

}  // namespace costembed

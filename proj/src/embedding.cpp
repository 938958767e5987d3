#include "costembed/circuit.hpp"

#include <stdexcept>

namespace costembed {

Circuit embed_cost(const Circuit &circuit, CostKind kind) {
    if (circuit.cost_kind_) {
        throw std::invalid_argument("circuit already carries a cost embedding");
    }
    if (circuit.probe_qubit_) {
        throw std::invalid_argument("cannot embed a cost into a gradient probe");
    }
    const auto &layout = circuit.layout();
    if (layout.label.empty()) {
        throw std::invalid_argument("cost embedding needs a label qubit");
    }
    Circuit out = circuit;
    const QubitIndex label = layout.label.front();
    if (kind == CostKind::Cnot) {
        out.append(gates::cnot(label, layout.output));
        out.cost_readout_ = layout.output;
    } else {
        if (layout.ancilla.empty()) {
            throw std::invalid_argument("Fredkin cost needs an ancilla qubit");
        }
        const QubitIndex anc = layout.ancilla.front();
        out.append(gates::h(anc));
        out.append(gates::cswap(anc, layout.output, label));
        out.append(gates::h(anc));
        out.cost_readout_ = anc;
    }
    out.cost_kind_ = kind;
    return out;
}

Circuit build_gradient_probe(const Circuit &circuit, std::string_view slot_id) {
    if (!circuit.cost_kind_ || !circuit.cost_readout_) {
        throw std::invalid_argument("gradient probe needs a cost-embedded circuit");
    }
    if (circuit.probe_qubit_) {
        throw std::invalid_argument("circuit already carries a gradient probe");
    }
    const ParamSlot *slot = circuit.find_slot(slot_id);
    if (slot == nullptr) {
        throw std::invalid_argument("no parameter slot named " + std::string(slot_id));
    }
    Circuit out = circuit;
    const QubitIndex probe = circuit.num_qubits();
    out.add_qubit_to_ancilla(probe);
    out.probe_qubit_ = probe;

    const Gate &rotation = circuit.gates()[slot->gate_position];
    const std::size_t after_rotation = slot->gate_position + 1;
    out.insert(after_rotation, gates::controlled_pauli(slot->pauli, probe, rotation.targets[0]));
    out.insert(0, gates::h(probe));
    out.append(gates::cz(probe, *circuit.cost_readout_));
    out.append(gates::h(probe));
    out.append(gates::rx(probe, kProbeFinalAngle));
    return out;
}

}  // namespace costembed

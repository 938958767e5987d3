#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "costembed/gate.hpp"
#include "costembed/state.hpp"

namespace costembed {

/// Role of every qubit in a register. Roles are disjoint and cover the register.
struct RegisterLayout {
    std::vector<QubitIndex> data;
    std::vector<QubitIndex> label;
    std::vector<QubitIndex> index;
    std::vector<QubitIndex> ancilla;
    QubitIndex output = 0;

    std::size_t num_qubits() const { return data.size() + label.size() + index.size() + ancilla.size(); }

    /// Throws std::invalid_argument when roles overlap, leave gaps, or the
    /// output is not a data qubit.
    void validate() const;

    bool operator==(const RegisterLayout &) const = default;
};

/// Extra registers requested from the ansatz builders.
struct RegisterOptions {
    bool ancilla = false;          // swap-test ancilla for the Fredkin cost
    std::size_t index_qubits = 0;  // ordinal register for superposition inputs
};

/// Data qubits occupy [0, num_data), then one label qubit, the optional
/// ancilla, and the index register.
RegisterLayout make_layout(std::size_t num_data, std::size_t output_position, const RegisterOptions &opts);

struct ParamSlot {
    std::string id;
    std::size_t gate_position = 0;
    Pauli pauli = Pauli::X;

    bool operator==(const ParamSlot &) const = default;
};

enum class CostKind { Cnot, Fredkin };

std::string_view to_string(CostKind kind);
std::optional<CostKind> cost_kind_from_string(std::string_view s);

using ParameterVector = std::vector<double>;

/// Gate sequence with every rotation angle fixed.
struct BoundCircuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;
    QubitIndex readout = 0;
};

/// Gate list over a role-annotated register with named parameter slots.
class Circuit {
  public:
    explicit Circuit(RegisterLayout layout);

    const RegisterLayout &layout() const { return layout_; }
    std::size_t num_qubits() const { return layout_.num_qubits(); }
    const std::vector<Gate> &gates() const { return gates_; }
    const std::vector<ParamSlot> &slots() const { return slots_; }

    /// Appends a fixed gate. Rotations must already carry an angle.
    void append(Gate gate);

    /// Appends an unbound rotation owned by a new slot.
    void append_parameterized(Gate rotation, std::string slot_id);

    /// Inserts a fixed gate before `position`; slot positions after it shift.
    void insert(std::size_t position, Gate gate);

    const ParamSlot *find_slot(std::string_view id) const;
    std::optional<std::size_t> slot_index(std::string_view id) const;

    std::optional<CostKind> cost_kind() const { return cost_kind_; }
    /// Qubit whose P(|1>) holds the cost, once embedded.
    std::optional<QubitIndex> cost_readout() const { return cost_readout_; }
    std::optional<QubitIndex> probe_qubit() const { return probe_qubit_; }

    /// Qubit measured when executing this circuit: the probe if present,
    /// else the cost readout, else the ansatz output.
    QubitIndex readout() const;

    /// Throws std::invalid_argument when params.size() != slot count.
    BoundCircuit bind(const ParameterVector &params) const;

  private:
    friend Circuit embed_cost(const Circuit &circuit, CostKind kind);
    friend Circuit build_gradient_probe(const Circuit &circuit, std::string_view slot_id);
    friend Circuit parse_circuit(std::string_view text);

    void add_qubit_to_ancilla(QubitIndex q);

    RegisterLayout layout_;
    std::vector<Gate> gates_;
    std::vector<ParamSlot> slots_;
    std::optional<CostKind> cost_kind_;
    std::optional<QubitIndex> cost_readout_;
    std::optional<QubitIndex> probe_qubit_;
};

/// RX, RZ, RX on `qubit` with slots `<prefix>/rx0`, `<prefix>/rz`, `<prefix>/rx1`.
void append_single_qubit_block(Circuit &circuit, QubitIndex qubit, const std::string &prefix);

/// Two data qubits: a rotation block on each, CNOT(data0 -> data1), and a
/// block on data1, which is the output. Nine slots.
Circuit build_xor_ansatz(const RegisterOptions &opts = {});

/// Four data qubits reduced as a binary tree: blocks on all four,
/// CNOT(d0 -> d1) and CNOT(d3 -> d2), blocks on d1 and d2, CNOT(d1 -> d2),
/// a final block on d2. Output is d2. Twenty-one slots.
Circuit build_iris_ansatz(const RegisterOptions &opts = {});

/// The parameter singled out in the hierarchical circuit drawing: last RX of
/// the second-level block on d2.
inline constexpr std::string_view kIrisMarkedSlot = "L1.q2/rx1";

/// Appends the cost circuit. Cnot: CNOT(label -> output), readout on the
/// output. Fredkin: H, CSWAP(ancilla; output, label), H on the ancilla,
/// readout on the ancilla. Throws std::invalid_argument when the label or
/// (for Fredkin) ancilla is missing, or a cost is already embedded.
Circuit embed_cost(const Circuit &circuit, CostKind kind);

/// Angle of the final probe rotation. Under exp(i theta X) this turns the
/// Bloch vector by pi/2 about X.
inline constexpr double kProbeFinalAngle = 0.78539816339744830962;

/// Hadamard-test probe for one slot. Adds a fresh probe qubit (appended to
/// the ancilla role), prepends H on it, inserts ControlledPauli right after
/// the slot's rotation, appends CZ(probe, cost readout), H and the final
/// X rotation on the probe. The probe's readout P(|1>) maps to the cost
/// derivative through `gradient_from_probe`.
Circuit build_gradient_probe(const Circuit &circuit, std::string_view slot_id);

/// Proportionality between <Z> on the probe and d(cost)/d(theta). Fixed by
/// calibration against central finite differences.
inline constexpr double kGradientScale = 1.0;

/// d(cost)/d(theta) = k * <Z_probe> = k * (1 - 2 P(|1>)).
double gradient_from_probe(double probe_p1, double k = kGradientScale);

/// Line-oriented text form: a `layout` header, optional `cost` and `probe`
/// lines, then one gate per line. See README for the grammar.
std::string serialize(const Circuit &circuit);
Circuit parse_circuit(std::string_view text);

/// Noiseless execution of a bound circuit on an input state.
QuantumState simulate(const BoundCircuit &circuit, QuantumState input);

}  // namespace costembed

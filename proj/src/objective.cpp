#include "costembed/objective.hpp"

#include <stdexcept>
#include <string>

#include "costembed/sim.hpp"

namespace costembed {

namespace {

void check_width(const Circuit &circuit, const QuantumState &input) {
    if (num_qubits(input) != circuit.num_qubits()) {
        throw std::invalid_argument("input register width " + std::to_string(num_qubits(input)) +
                                    " does not match circuit width " + std::to_string(circuit.num_qubits()));
    }
}

void check_embedded(const Circuit &circuit) {
    if (!circuit.cost_kind()) {
        throw std::invalid_argument("circuit has no cost embedding");
    }
}

QuantumState with_probe_qubit(const QuantumState &input) {
    if (const auto *psi = std::get_if<StateVector>(&input)) {
        return tensor(*psi, StateVector(1));
    }
    return tensor(std::get<DensityMatrix>(input), DensityMatrix(1));
}

}  // namespace

std::string_view to_string(NoiseInsertion where) {
    return where == NoiseInsertion::BeforeReadout ? "before-readout" : "after-each-gate";
}

std::optional<NoiseInsertion> noise_insertion_from_string(std::string_view s) {
    if (s == "before-readout") return NoiseInsertion::BeforeReadout;
    if (s == "after-each-gate") return NoiseInsertion::AfterEachGate;
    return std::nullopt;
}

void NoiseConfig::validate() const {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("noise lambda must lie in [0, 1]");
    }
}

double execute_readout(const BoundCircuit &circuit, const QuantumState &input, const NoiseConfig &noise) {
    if (num_qubits(input) != circuit.num_qubits) {
        throw std::invalid_argument("input register width does not match circuit width");
    }
    const auto *psi_in = std::get_if<StateVector>(&input);
    if (psi_in != nullptr && !noise.enabled) {
        StateVector psi = *psi_in;
        for (const auto &g : circuit.gates) detail::apply_gate_inplace(psi, g);
        return expectation_z(psi, circuit.readout);
    }
    noise.validate();
    DensityMatrix rho = to_density(input);
    const bool per_gate = noise.enabled && noise.insertion == NoiseInsertion::AfterEachGate;
    for (const auto &g : circuit.gates) {
        detail::apply_gate_inplace(rho, g);
        if (per_gate) detail::depolarize_inplace(rho, noise.lambda);
    }
    if (noise.enabled && noise.insertion == NoiseInsertion::BeforeReadout) {
        detail::depolarize_inplace(rho, noise.lambda);
    }
    return expectation_z(rho, circuit.readout);
}

double evaluate_cost(const Circuit &circuit, const ParameterVector &params, const QuantumState &input,
                     const NoiseConfig &noise) {
    check_embedded(circuit);
    check_width(circuit, input);
    return execute_readout(circuit.bind(params), input, noise);
}

double evaluate_cost(const Circuit &circuit, const ParameterVector &params, const TrainingInput &input,
                     const NoiseConfig &noise) {
    check_embedded(circuit);
    const BoundCircuit bound = circuit.bind(params);
    double total = 0.0;
    for (const auto &[state, weight] : input) {
        check_width(circuit, state);
        total += weight * execute_readout(bound, state, noise);
    }
    return total;
}

CostModel::CostModel(Circuit circuit) : circuit_(std::move(circuit)) {
    check_embedded(circuit_);
    probes_.reserve(circuit_.slots().size());
    for (const auto &slot : circuit_.slots()) {
        probes_.push_back(build_gradient_probe(circuit_, slot.id));
    }
}

double CostModel::cost(const ParameterVector &params, const TrainingInput &input, const NoiseConfig &noise) const {
    return evaluate_cost(circuit_, params, input, noise);
}

std::vector<double> CostModel::gradient(const ParameterVector &params, const TrainingInput &input,
                                        const NoiseConfig &noise, double k) const {
    if (params.size() != num_params()) {
        throw std::invalid_argument("parameter vector length does not match the slot count");
    }
    noise.validate();
    std::vector<QuantumState> extended;
    extended.reserve(input.size());
    for (const auto &ws : input) {
        check_width(circuit_, ws.state);
        extended.push_back(with_probe_qubit(ws.state));
    }
    std::vector<BoundCircuit> bound;
    bound.reserve(probes_.size());
    for (const auto &probe : probes_) bound.push_back(probe.bind(params));

    std::vector<double> grad(probes_.size(), 0.0);
    const auto count = static_cast<std::int64_t>(probes_.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t j = 0; j < count; ++j) {
        double g = 0.0;
        for (std::size_t i = 0; i < extended.size(); ++i) {
            g += input[i].weight * gradient_from_probe(execute_readout(bound[j], extended[i], noise), k);
        }
        grad[j] = g;
    }
    return grad;
}

std::vector<double> evaluate_gradient(const Circuit &circuit, const ParameterVector &params,
                                      const QuantumState &input, const NoiseConfig &noise) {
    return evaluate_gradient(circuit, params, TrainingInput{{input, 1.0}}, noise);
}

std::vector<double> evaluate_gradient(const Circuit &circuit, const ParameterVector &params,
                                      const TrainingInput &input, const NoiseConfig &noise) {
    return CostModel(circuit).gradient(params, input, noise);
}

std::vector<double> finite_difference_gradient(const Circuit &circuit, const ParameterVector &params,
                                               const TrainingInput &input, double h, const NoiseConfig &noise) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    std::vector<double> grad(params.size());
    ParameterVector shifted = params;
    for (std::size_t j = 0; j < params.size(); ++j) {
        shifted[j] = params[j] + h;
        const double up = evaluate_cost(circuit, shifted, input, noise);
        shifted[j] = params[j] - h;
        const double down = evaluate_cost(circuit, shifted, input, noise);
        shifted[j] = params[j];
        grad[j] = (up - down) / (2.0 * h);
    }
    return grad;
}

std::vector<double> finite_difference_gradient(const Circuit &circuit, const ParameterVector &params,
                                               const QuantumState &input, double h, const NoiseConfig &noise) {
    return finite_difference_gradient(circuit, params, TrainingInput{{input, 1.0}}, h, noise);
}

std::vector<double> predict_probabilities(const Circuit &ansatz, const ParameterVector &params,
                                          const std::vector<EncodedExample> &examples) {
    const BoundCircuit bound = ansatz.bind(params);
    const QubitIndex output = ansatz.layout().output;
    std::vector<double> p1;
    p1.reserve(examples.size());
    for (const auto &ex : examples) {
        StateVector psi = encode_point(ex, ansatz.layout());
        for (const auto &g : bound.gates) detail::apply_gate_inplace(psi, g);
        p1.push_back(expectation_z(psi, output));
    }
    return p1;
}

double accuracy_from_probabilities(const std::vector<double> &p1, const std::vector<EncodedExample> &examples) {
    if (p1.size() != examples.size() || examples.empty()) {
        throw std::invalid_argument("accuracy needs one probability per example");
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < examples.size(); ++i) {
        if (examples[i].label_bit != 0 && examples[i].label_bit != 1) {
            throw std::invalid_argument("accuracy needs binary label bits");
        }
        const int predicted = p1[i] > 0.5 ? 1 : 0;
        if (predicted == examples[i].label_bit) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(examples.size());
}

double accuracy(const Circuit &ansatz, const ParameterVector &params, const std::vector<EncodedExample> &examples) {
    return accuracy_from_probabilities(predict_probabilities(ansatz, params, examples), examples);
}

double mean_square_error(const std::vector<double> &p1, const std::vector<EncodedExample> &examples) {
    if (p1.size() != examples.size() || examples.empty()) {
        throw std::invalid_argument("mse needs one probability per example");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const double d = p1[i] - static_cast<double>(examples[i].label_bit);
        total += d * d;
    }
    return total / static_cast<double>(p1.size());
}

}  // namespace costembed

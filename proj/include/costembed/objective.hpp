#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "costembed/circuit.hpp"
#include "costembed/encoding.hpp"
#include "costembed/state.hpp"

namespace costembed {

enum class NoiseInsertion {
    BeforeReadout,  // one channel on the full register after the last gate
    AfterEachGate,  // one channel on the full register after every gate
};

std::string_view to_string(NoiseInsertion where);
std::optional<NoiseInsertion> noise_insertion_from_string(std::string_view s);

struct NoiseConfig {
    bool enabled = false;
    double lambda = 1.0;
    NoiseInsertion insertion = NoiseInsertion::BeforeReadout;

    static NoiseConfig none() { return {}; }
    static NoiseConfig depolarizing(double lambda, NoiseInsertion where = NoiseInsertion::BeforeReadout) {
        return {true, lambda, where};
    }
    /// Throws std::invalid_argument for lambda outside [0, 1].
    void validate() const;
};

/// A training input: one state (pure point, mixed ensemble or superposition)
/// with its weight in the dataset average.
struct WeightedState {
    QuantumState state;
    double weight = 1.0;
};

using TrainingInput = std::vector<WeightedState>;

/// Runs a bound circuit and returns P(|1>) on its readout qubit. Uses the
/// density-matrix path when noise is on or the input is mixed.
double execute_readout(const BoundCircuit &circuit, const QuantumState &input, const NoiseConfig &noise);

/// Cost readout of a cost-embedded circuit, in [0, 1]. Throws
/// std::invalid_argument when the circuit has no cost or the input width
/// differs from the register.
double evaluate_cost(const Circuit &circuit, const ParameterVector &params, const QuantumState &input,
                     const NoiseConfig &noise = {});
double evaluate_cost(const Circuit &circuit, const ParameterVector &params, const TrainingInput &input,
                     const NoiseConfig &noise = {});

/// Cost circuit plus one gradient probe per slot, built once and reused.
class CostModel {
  public:
    /// `circuit` must be cost-embedded.
    explicit CostModel(Circuit circuit);

    const Circuit &circuit() const { return circuit_; }
    const std::vector<Circuit> &probes() const { return probes_; }
    std::size_t num_params() const { return circuit_.slots().size(); }

    double cost(const ParameterVector &params, const TrainingInput &input, const NoiseConfig &noise = {}) const;

    /// One probe execution per slot, k * <Z_probe> each. Slots are evaluated
    /// in parallel; the result does not depend on the thread count.
    std::vector<double> gradient(const ParameterVector &params, const TrainingInput &input,
                                 const NoiseConfig &noise = {}, double k = kGradientScale) const;

  private:
    Circuit circuit_;
    std::vector<Circuit> probes_;
};

std::vector<double> evaluate_gradient(const Circuit &circuit, const ParameterVector &params,
                                      const QuantumState &input, const NoiseConfig &noise = {});
std::vector<double> evaluate_gradient(const Circuit &circuit, const ParameterVector &params,
                                      const TrainingInput &input, const NoiseConfig &noise = {});

/// Central differences of `evaluate_cost`. Throws std::invalid_argument for h <= 0.
std::vector<double> finite_difference_gradient(const Circuit &circuit, const ParameterVector &params,
                                               const TrainingInput &input, double h,
                                               const NoiseConfig &noise = {});
std::vector<double> finite_difference_gradient(const Circuit &circuit, const ParameterVector &params,
                                               const QuantumState &input, double h,
                                               const NoiseConfig &noise = {});

/// P(|1>) on the ansatz output for every example. `ansatz` is the circuit
/// before cost embedding.
std::vector<double> predict_probabilities(const Circuit &ansatz, const ParameterVector &params,
                                          const std::vector<EncodedExample> &examples);

/// Fraction of examples with (P(|1>) > 0.5) == label bit. P = 0.5 predicts 0.
double accuracy(const Circuit &ansatz, const ParameterVector &params, const std::vector<EncodedExample> &examples);
double accuracy_from_probabilities(const std::vector<double> &p1, const std::vector<EncodedExample> &examples);

/// Mean of (P(|1>) - label bit)^2.
double mean_square_error(const std::vector<double> &p1, const std::vector<EncodedExample> &examples);

}  // namespace costembed

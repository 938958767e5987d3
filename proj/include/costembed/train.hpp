#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "costembed/adam.hpp"
#include "costembed/circuit.hpp"
#include "costembed/encoding.hpp"
#include "costembed/objective.hpp"

namespace costembed {

/// How the training set enters the circuit.
enum class EncodingMode {
    PerPoint,       // every point simulated separately, costs averaged
    Mixed,          // one exact mixed-state density matrix
    Sampled,        // a fresh batch of uniform draws each iteration
    Superposition,  // one pure state with an ordinal register (digital data)
};

std::string_view to_string(EncodingMode mode);
std::optional<EncodingMode> encoding_mode_from_string(std::string_view s);

/// Register options an encoding needs on top of the cost's own requirements.
RegisterOptions register_options_for(CostKind cost, EncodingMode mode, std::size_t num_examples);

/// Inputs for a full-batch evaluation. Sampled mode is expanded per iteration
/// by the trainer and is rejected here.
TrainingInput make_training_input(const std::vector<EncodedExample> &examples, const RegisterLayout &layout,
                                  EncodingMode mode);

struct TrainingTask {
    TrainingTask(std::string task_name, Circuit ansatz_circuit)
        : name(std::move(task_name)), ansatz(std::move(ansatz_circuit)) {}

    std::string name;
    Circuit ansatz;  // before cost embedding, built with matching register options
    CostKind cost = CostKind::Cnot;
    EncodingMode encoding = EncodingMode::PerPoint;
    std::vector<EncodedExample> train;
    std::vector<EncodedExample> test;
    AdamConfig adam;
    NoiseConfig noise;
    std::uint64_t seed = 0;
    std::optional<double> stop_below;         // early stop once cost < threshold
    std::size_t sampled_batch = 16;           // draws per iteration in Sampled mode
    std::optional<ParameterVector> initial;   // overrides the seeded initialization
};

struct TraceRecord {
    std::size_t iteration = 0;
    double cost = 0.0;
    double mse = 0.0;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
    ParameterVector params;
};

struct TrainingTrace {
    std::vector<TraceRecord> records;

    const TraceRecord &final() const { return records.back(); }
    /// First iteration whose cost is below `threshold`.
    std::optional<std::size_t> first_below(double threshold) const;
};

/// Uniform on [0, 2pi), seeded.
ParameterVector initial_parameters(std::size_t count, std::uint64_t seed);

/// Full-batch Adam on the cost readout. Record i holds the metrics at the
/// parameters before update i; the last record holds the final parameters.
/// Throws std::runtime_error if the cost turns non-finite.
TrainingTrace train(const TrainingTask &task);

}  // namespace costembed

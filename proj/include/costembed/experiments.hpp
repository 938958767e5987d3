#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "costembed/train.hpp"

namespace costembed {

enum class Experiment { Xor, Iris, Custom };

std::string_view to_string(Experiment e);
std::optional<Experiment> experiment_from_string(std::string_view s);

/// Everything needed to rebuild one training run.
struct ExperimentConfig {
    Experiment experiment = Experiment::Xor;
    CostKind cost = CostKind::Cnot;
    EncodingMode encoding = EncodingMode::Superposition;
    double learning_rate = 1e-3;
    std::size_t max_iterations = 2000;
    std::optional<double> noise_lambda;
    NoiseInsertion noise_insertion = NoiseInsertion::AfterEachGate;  // gate-level noise
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> dataset;  // overrides the bundled Iris table; required for custom
    bool dataset_has_header = false;
    double train_fraction = 0.7;
    std::optional<double> stop_below;
    std::size_t sampled_batch = 16;

    /// Paper protocol defaults: XOR trains on the indexed superposition at
    /// lr 1e-3, Iris on the exact mixed state at lr 1e-2.
    static ExperimentConfig defaults_for(Experiment e);
};

NoiseConfig noise_of(const ExperimentConfig &config);

/// Loads data, splits and normalizes it, and builds the ansatz with the
/// registers the cost and encoding need. Throws std::runtime_error for an
/// unreadable dataset and std::invalid_argument for an inconsistent config.
TrainingTask make_task(const ExperimentConfig &config);

/// Two-class Iris (labels 1 and 2) split and scaled on the training part.
struct IrisData {
    std::vector<EncodedExample> train;
    std::vector<EncodedExample> test;
    FeatureScaling scaling;
};
IrisData prepare_iris(const Dataset &full, double train_fraction, std::uint64_t seed);

std::vector<EncodedExample> xor_examples();

/// Columns: iteration,cost,mse,train_acc,test_acc. Doubles are written with
/// 17 significant digits so reruns compare byte-for-byte.
void write_trace_csv(const TrainingTrace &trace, std::ostream &out);
std::string trace_csv(const TrainingTrace &trace);

/// JSON manifest with every effective config value, the seed, the final
/// parameters and the final metrics.
std::string manifest_json(const ExperimentConfig &config, const TrainingTrace &trace, const std::string &trace_file);

}  // namespace costembed

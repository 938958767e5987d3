#include "costembed/experiments.hpp"

#include <stdexcept>

namespace costembed {

namespace {

bool all_binary(const Dataset &data) {
    for (const auto &row : data.features) {
        for (double v : row) {
            if (v != 0.0 && v != 1.0) return false;
        }
    }
    return true;
}

}  // namespace

std::string_view to_string(Experiment e) {
    switch (e) {
        case Experiment::Xor: return "xor";
        case Experiment::Iris: return "iris";
        case Experiment::Custom: return "custom";
    }
    return "?";
}

std::optional<Experiment> experiment_from_string(std::string_view s) {
    for (auto e : {Experiment::Xor, Experiment::Iris, Experiment::Custom}) {
        if (to_string(e) == s) return e;
    }
    return std::nullopt;
}

ExperimentConfig ExperimentConfig::defaults_for(Experiment e) {
    ExperimentConfig c;
    c.experiment = e;
    switch (e) {
        case Experiment::Xor:
            c.encoding = EncodingMode::Superposition;
            c.learning_rate = 1e-3;
            break;
        case Experiment::Iris:
        case Experiment::Custom:
            c.encoding = EncodingMode::Mixed;
            c.learning_rate = 1e-2;
            break;
    }
    return c;
}

NoiseConfig noise_of(const ExperimentConfig &config) {
    if (!config.noise_lambda) return NoiseConfig::none();
    return NoiseConfig::depolarizing(*config.noise_lambda, config.noise_insertion);
}

std::vector<EncodedExample> xor_examples() {
    return encode_digital(xor_dataset(), BinaryLabelMap({0, 1}));
}

IrisData prepare_iris(const Dataset &full, double train_fraction, std::uint64_t seed) {
    const Dataset two = select_classes(full, {1, 2});
    if (two.class_set().size() != 2) {
        throw std::invalid_argument("Iris table lacks classes 1 and 2");
    }
    const Split split = stratified_split(two, train_fraction, seed);
    FeatureScaling scaling = FeatureScaling::fit(split.train);
    const BinaryLabelMap labels({1, 2});
    return {encode_angles(scaling.apply(split.train), labels), encode_angles(scaling.apply(split.test), labels),
            std::move(scaling)};
}

TrainingTask make_task(const ExperimentConfig &config) {
    std::vector<EncodedExample> train_set;
    std::vector<EncodedExample> test_set;
    std::size_t num_features = 0;

    switch (config.experiment) {
        case Experiment::Xor:
            train_set = xor_examples();
            test_set = train_set;
            num_features = 2;
            break;
        case Experiment::Iris: {
            const Dataset full = config.dataset ? read_csv(*config.dataset, {config.dataset_has_header})
                                                : load_bundled_iris();
            auto iris = prepare_iris(full, config.train_fraction, config.seed);
            train_set = std::move(iris.train);
            test_set = std::move(iris.test);
            num_features = full.feature_count;
            break;
        }
        case Experiment::Custom: {
            if (!config.dataset) {
                throw std::invalid_argument("custom experiment needs --dataset");
            }
            const Dataset data = read_csv(*config.dataset, {config.dataset_has_header});
            const BinaryLabelMap labels(data.class_set());
            num_features = data.feature_count;
            if (all_binary(data)) {
                train_set = encode_digital(data, labels);
                test_set = train_set;
            } else {
                const Split split = stratified_split(data, config.train_fraction, config.seed);
                const auto scaling = FeatureScaling::fit(split.train);
                train_set = encode_angles(scaling.apply(split.train), labels);
                test_set = encode_angles(scaling.apply(split.test), labels);
            }
            break;
        }
    }

    const RegisterOptions opts = register_options_for(config.cost, config.encoding, train_set.size());
    std::optional<Circuit> ansatz;
    if (num_features == 2) {
        ansatz = build_xor_ansatz(opts);
    } else if (num_features == 4) {
        ansatz = build_iris_ansatz(opts);
    } else {
        throw std::invalid_argument("no ansatz for " + std::to_string(num_features) +
                                    " features; supported widths are 2 and 4");
    }

    TrainingTask task(std::string(to_string(config.experiment)), std::move(*ansatz));
    task.cost = config.cost;
    task.encoding = config.encoding;
    task.train = std::move(train_set);
    task.test = std::move(test_set);
    task.adam.learning_rate = config.learning_rate;
    task.adam.max_iterations = config.max_iterations;
    task.noise = noise_of(config);
    task.seed = config.seed;
    task.stop_below = config.stop_below;
    task.sampled_batch = config.sampled_batch;
    return task;
}

}  // namespace costembed

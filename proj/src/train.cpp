#include "costembed/train.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace costembed {

std::string_view to_string(EncodingMode mode) {
    switch (mode) {
        case EncodingMode::PerPoint: return "perpoint";
        case EncodingMode::Mixed: return "mixed";
        case EncodingMode::Sampled: return "sampled";
        case EncodingMode::Superposition: return "superposition";
    }
    return "?";
}

std::optional<EncodingMode> encoding_mode_from_string(std::string_view s) {
    for (auto m : {EncodingMode::PerPoint, EncodingMode::Mixed, EncodingMode::Sampled, EncodingMode::Superposition}) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

RegisterOptions register_options_for(CostKind cost, EncodingMode mode, std::size_t num_examples) {
    RegisterOptions opts;
    opts.ancilla = cost == CostKind::Fredkin;
    if (mode == EncodingMode::Superposition) {
        opts.index_qubits = index_width(num_examples);
    }
    return opts;
}

TrainingInput make_training_input(const std::vector<EncodedExample> &examples, const RegisterLayout &layout,
                                  EncodingMode mode) {
    if (examples.empty()) {
        throw std::invalid_argument("training set is empty");
    }
    TrainingInput input;
    switch (mode) {
        case EncodingMode::PerPoint: {
            const double w = 1.0 / static_cast<double>(examples.size());
            for (const auto &ex : examples) input.push_back({encode_point(ex, layout), w});
            break;
        }
        case EncodingMode::Mixed:
            input.push_back({build_mixed_state(examples, layout), 1.0});
            break;
        case EncodingMode::Superposition:
            input.push_back({build_superposition_with_index(examples, layout), 1.0});
            break;
        case EncodingMode::Sampled:
            throw std::invalid_argument("sampled inputs are drawn per iteration");
    }
    return input;
}

std::optional<std::size_t> TrainingTrace::first_below(double threshold) const {
    for (const auto &r : records) {
        if (r.cost < threshold) return r.iteration;
    }
    return std::nullopt;
}

ParameterVector initial_parameters(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    ParameterVector params(count);
    for (auto &p : params) p = angle(rng);
    return params;
}

TrainingTrace train(const TrainingTask &task) {
    task.adam.validate();
    task.noise.validate();
    const CostModel model(embed_cost(task.ansatz, task.cost));
    const RegisterLayout &layout = task.ansatz.layout();

    ParameterVector params = task.initial ? *task.initial : initial_parameters(model.num_params(), task.seed);
    if (params.size() != model.num_params()) {
        throw std::invalid_argument("initial parameter vector has the wrong length");
    }

    TrainingInput input;
    std::optional<EnsembleSampler> sampler;
    if (task.encoding == EncodingMode::Sampled) {
        if (task.sampled_batch == 0) throw std::invalid_argument("sampled batch must be positive");
        // Separate stream from parameter initialization.
        sampler.emplace(task.train, task.seed ^ 0x9e3779b97f4a7c15ULL);
    } else {
        input = make_training_input(task.train, layout, task.encoding);
    }

    Adam adam(task.adam, model.num_params());
    TrainingTrace trace;
    for (std::size_t it = 0;; ++it) {
        if (sampler) {
            input.clear();
            const double w = 1.0 / static_cast<double>(task.sampled_batch);
            for (std::size_t b = 0; b < task.sampled_batch; ++b) {
                input.push_back({encode_point(sampler->next(), layout), w});
            }
        }
        TraceRecord rec;
        rec.iteration = it;
        rec.cost = model.cost(params, input, task.noise);
        if (!std::isfinite(rec.cost)) {
            throw std::runtime_error("cost became non-finite at iteration " + std::to_string(it));
        }
        const auto p_train = predict_probabilities(task.ansatz, params, task.train);
        rec.mse = mean_square_error(p_train, task.train);
        rec.train_accuracy = accuracy_from_probabilities(p_train, task.train);
        rec.test_accuracy = task.test.empty() ? std::numeric_limits<double>::quiet_NaN()
                                              : accuracy(task.ansatz, params, task.test);
        rec.params = params;
        trace.records.push_back(std::move(rec));

        const bool converged = task.stop_below && trace.records.back().cost < *task.stop_below;
        if (it >= task.adam.max_iterations || converged) break;

        const auto grad = model.gradient(params, input, task.noise);
        adam.step(params, grad);
    }
    return trace;
}

}  // namespace costembed

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "costembed/experiments.hpp"

namespace costembed {

namespace {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

void write_trace_csv(const TrainingTrace &trace, std::ostream &out) {
    out << "iteration,cost,mse,train_acc,test_acc\n";
    for (const auto &r : trace.records) {
        out << r.iteration << ',' << fmt(r.cost) << ',' << fmt(r.mse) << ',' << fmt(r.train_accuracy) << ','
            << fmt(r.test_accuracy) << '\n';
    }
}

std::string trace_csv(const TrainingTrace &trace) {
    std::ostringstream out;
    write_trace_csv(trace, out);
    return out.str();
}

std::string manifest_json(const ExperimentConfig &config, const TrainingTrace &trace, const std::string &trace_file) {
    nlohmann::json j;
    j["experiment"] = to_string(config.experiment);
    j["cost"] = to_string(config.cost);
    j["encoding"] = to_string(config.encoding);
    j["learning_rate"] = config.learning_rate;
    j["max_iterations"] = config.max_iterations;
    j["noise"] = config.noise_lambda ? nlohmann::json(*config.noise_lambda) : nlohmann::json(nullptr);
    j["noise_insertion"] = to_string(config.noise_insertion);
    j["seed"] = config.seed;
    j["dataset"] = config.dataset ? config.dataset->string() : bundled_iris_path().string();
    if (config.experiment == Experiment::Xor) j["dataset"] = "builtin:xor";
    j["dataset_has_header"] = config.dataset_has_header;
    j["train_fraction"] = config.train_fraction;
    j["stop_below"] = config.stop_below ? nlohmann::json(*config.stop_below) : nlohmann::json(nullptr);
    j["sampled_batch"] = config.sampled_batch;
    j["trace_file"] = trace_file;
    if (!trace.records.empty()) {
        const auto &last = trace.final();
        j["iterations_run"] = last.iteration;
        j["final"] = {{"cost", last.cost},
                      {"mse", last.mse},
                      {"train_acc", last.train_accuracy},
                      {"test_acc", number_or_null(last.test_accuracy)},
                      {"params", last.params}};
    }
    return j.dump(2) + "\n";
}

}  // namespace costembed

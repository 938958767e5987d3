#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "costembed/experiments.hpp"
#include "costembed/verify.hpp"

namespace fs = std::filesystem;
using namespace costembed;

namespace {

// Values left unset fall back to the experiment's defaults.
struct RunFlags {
    std::string experiment;
    std::optional<std::string> cost;
    std::optional<std::string> encoding;
    std::optional<double> lr;
    std::optional<std::size_t> iters;
    std::optional<double> noise;
    std::optional<std::string> insertion;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> dataset;
    bool header = false;
    std::optional<double> train_fraction;
    std::optional<double> stop_below;
    std::optional<std::size_t> batch;
    std::string out = ".";
};

void add_run_flags(CLI::App *cmd, RunFlags &f, bool with_noise) {
    cmd->add_option("experiment", f.experiment, "xor, iris or custom")
        ->required()
        ->check(CLI::IsMember({"xor", "iris", "custom"}));
    cmd->add_option("--cost", f.cost, "cnot or fredkin")->check(CLI::IsMember({"cnot", "fredkin"}));
    cmd->add_option("--encoding", f.encoding, "perpoint, mixed, sampled or superposition")
        ->check(CLI::IsMember({"perpoint", "mixed", "sampled", "superposition"}));
    cmd->add_option("--lr", f.lr, "Adam learning rate");
    cmd->add_option("--iters", f.iters, "maximum iterations");
    if (with_noise) cmd->add_option("--noise", f.noise, "depolarizing lambda in [0, 1]");
    cmd->add_option("--noise-insertion", f.insertion, "after-each-gate or before-readout")
        ->check(CLI::IsMember({"after-each-gate", "before-readout"}));
    cmd->add_option("--seed", f.seed, "RNG seed")->required();
    cmd->add_option("--dataset", f.dataset, "CSV: feature columns then an integer label");
    cmd->add_flag("--header", f.header, "dataset CSV has a header row");
    cmd->add_option("--train-fraction", f.train_fraction, "per-class training share");
    cmd->add_option("--stop-below", f.stop_below, "stop once the cost drops below this");
    cmd->add_option("--batch", f.batch, "draws per iteration for the sampled encoding");
    cmd->add_option("--out", f.out, "output directory");
}

ExperimentConfig to_config(const RunFlags &f) {
    auto config = ExperimentConfig::defaults_for(*experiment_from_string(f.experiment));
    if (f.cost) config.cost = *cost_kind_from_string(*f.cost);
    if (f.encoding) config.encoding = *encoding_mode_from_string(*f.encoding);
    if (f.lr) config.learning_rate = *f.lr;
    if (f.iters) config.max_iterations = *f.iters;
    config.noise_lambda = f.noise;
    if (f.insertion) config.noise_insertion = *noise_insertion_from_string(*f.insertion);
    config.seed = *f.seed;
    if (f.dataset) {
        if (!fs::is_regular_file(*f.dataset)) throw std::runtime_error("dataset not found: " + *f.dataset);
        config.dataset = fs::path(*f.dataset);
    }
    config.dataset_has_header = f.header;
    if (f.train_fraction) config.train_fraction = *f.train_fraction;
    config.stop_below = f.stop_below;
    if (f.batch) config.sampled_batch = *f.batch;
    return config;
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string fmt(double v, const char *spec = "%.6g") {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// Trains once and writes the trace plus its manifest under `dir`.
TrainingTrace run_one(const ExperimentConfig &config, const fs::path &dir, const std::string &trace_name,
                      const std::string &manifest_name) {
    if (config.noise_lambda) noise_of(config).validate();
    const TrainingTask task = make_task(config);
    const TrainingTrace trace = train(task);
    fs::create_directories(dir);
    write_file(dir / trace_name, trace_csv(trace));
    write_file(dir / manifest_name, manifest_json(config, trace, trace_name));
    return trace;
}

int cmd_run(const RunFlags &f) {
    const auto config = to_config(f);
    const auto trace = run_one(config, f.out, "trace.csv", "manifest.json");
    const auto &last = trace.final();
    std::cout << to_string(config.experiment) << " cost=" << to_string(config.cost)
              << " iterations=" << last.iteration << " final_cost=" << fmt(last.cost)
              << " mse=" << fmt(last.mse) << " train_acc=" << fmt(last.train_accuracy)
              << " test_acc=" << fmt(last.test_accuracy) << '\n';
    return 0;
}

int cmd_sweep(const RunFlags &f, const std::vector<double> &lambdas) {
    auto base = to_config(f);
    for (double l : lambdas) NoiseConfig::depolarizing(l).validate();

    std::string table = "lambda,final_cost,final_test_acc\n";
    std::printf("%-8s %-12s %s\n", "lambda", "final_cost", "test_acc");
    for (double l : lambdas) {
        auto config = base;
        // lambda = 1 is the matched noiseless run
        config.noise_lambda = l < 1.0 ? std::optional<double>(l) : std::nullopt;
        const std::string stem = "lambda-" + fmt(l, "%g");
        const auto trace = run_one(config, f.out, stem + ".csv", stem + ".json");
        const auto &last = trace.final();
        std::printf("%-8g %-12.6g %.6g\n", l, last.cost, last.test_accuracy);
        table += fmt(l, "%.17g") + ',' + fmt(last.cost, "%.17g") + ',' + fmt(last.test_accuracy, "%.17g") + '\n';
    }
    write_file(fs::path(f.out) / "sweep.csv", table);
    return 0;
}

int cmd_verify(const std::string &suite, const verify::Options &opts) {
    std::vector<verify::PropertyResult> results;
    auto add = [&](std::vector<verify::PropertyResult> r) { results.insert(results.end(), r.begin(), r.end()); };
    if (suite == "oracles" || suite == "all") add(verify::oracles(opts));
    if (suite == "gradients" || suite == "all") add(verify::gradients(opts));
    if (suite == "encodings" || suite == "all") add(verify::encodings(opts));

    for (const auto &r : results) {
        std::printf("%s  %-58s max_err=%.3e tol=%.1e", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_error,
                    r.tolerance);
        if (!r.detail.empty()) std::printf("  %s", r.detail.c_str());
        std::printf("\n");
    }
    const bool ok = verify::all_passed(results);
    std::printf("%s\n", ok ? "all properties pass" : "some properties FAILED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cost-embedded PQC training and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key-value config file; command-line flags take precedence");
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

    RunFlags run_flags;
    auto *run = app.add_subcommand("run", "train one model and write trace.csv and manifest.json");
    add_run_flags(run, run_flags, true);

    RunFlags sweep_flags;
    std::vector<double> lambdas{1.0, 0.999, 0.99};
    auto *sweep = app.add_subcommand("sweep", "train once per depolarizing lambda");
    add_run_flags(sweep, sweep_flags, false);
    sweep->add_option("--lambdas", lambdas, "lambda list")->delimiter(',');

    std::string suite;
    verify::Options verify_opts;
    auto *ver = app.add_subcommand("verify", "run the oracle, gradient and encoding checks");
    ver->add_option("suite", suite, "oracles, gradients, encodings or all")
        ->required()
        ->check(CLI::IsMember({"oracles", "gradients", "encodings", "all"}));
    ver->add_option("--seed", verify_opts.seed, "RNG seed for the random cases");
    ver->add_flag("--inject-k-sign-flip", verify_opts.flip_gradient_sign)->group("");

    CLI11_PARSE(app, argc, argv);
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (*run) return cmd_run(run_flags);
        if (*sweep) return cmd_sweep(sweep_flags, lambdas);
        return cmd_verify(suite, verify_opts);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

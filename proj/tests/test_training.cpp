#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "costembed/adam.hpp"
#include "costembed/experiments.hpp"
#include "costembed/sim.hpp"
#include "support.hpp"

using namespace costembed;

namespace {

TrainingTask xor_task(CostKind cost, EncodingMode mode, std::size_t iters, std::uint64_t seed = 7) {
    auto config = ExperimentConfig::defaults_for(Experiment::Xor);
    config.cost = cost;
    config.encoding = mode;
    config.max_iterations = iters;
    config.seed = seed;
    return make_task(config);
}

// Every Iris point on the register, CNOT cost, exact mixed state.
struct IrisFixture {
    Circuit circuit = embed_cost(build_iris_ansatz(), CostKind::Cnot);
    DensityMatrix rho;
    IrisFixture() : rho(build_mixed_state(prepare_iris(load_bundled_iris(), 0.7, 1).train, circuit.layout())) {}
};

}  // namespace

TEST(adam, zero_gradient_leaves_parameters) {
    Adam adam({}, 3);
    std::vector<double> p{1, 2, 3};
    const std::vector<double> g(3, 0.0);
    for (int i = 0; i < 5; ++i) adam.step(p, g);
    EXPECT_EQ(p, (std::vector<double>{1, 2, 3}));
    EXPECT_EQ(adam.steps_taken(), 5u);
}

TEST(adam, first_step_moves_by_learning_rate) {
    AdamConfig cfg;
    cfg.learning_rate = 0.01;
    Adam adam(cfg, 3);
    std::vector<double> p{0, 0, 0};
    adam.step(p, std::vector<double>{3.0, -0.2, 1e-3});
    // m_hat / sqrt(v_hat) = sign(g) on the first step, up to epsilon
    EXPECT_NEAR(p[0], -0.01, 1e-9);
    EXPECT_NEAR(p[1], 0.01, 1e-9);
    EXPECT_NEAR(p[2], -0.01, 1e-7);
}

TEST(adam, constant_gradient_drifts_monotonically) {
    AdamConfig cfg;
    cfg.learning_rate = 0.1;
    Adam adam(cfg, 1);
    std::vector<double> p{0};
    double prev = 0;
    for (int i = 0; i < 100; ++i) {
        adam.step(p, std::vector<double>{0.5});
        EXPECT_LT(p[0], prev);
        prev = p[0];
    }
}

TEST(adam, rejects_bad_config_and_sizes) {
    AdamConfig cfg;
    cfg.learning_rate = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.beta1 = 1.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    Adam adam({}, 2);
    std::vector<double> p(2);
    EXPECT_THROW(adam.step(p, std::vector<double>(3)), std::invalid_argument);
}

TEST(metrics, half_probability_predicts_class_zero) {
    std::vector<EncodedExample> ex(2);
    ex[0].label_bit = 0;
    ex[1].label_bit = 1;
    EXPECT_DOUBLE_EQ(accuracy_from_probabilities({0.5, 0.5}, ex), 0.5);
    EXPECT_DOUBLE_EQ(accuracy_from_probabilities({0.5, 0.5000001}, ex), 1.0);
}

TEST(metrics, mse_definition) {
    std::vector<EncodedExample> ex(3);
    ex[1].label_bit = 1;
    EXPECT_DOUBLE_EQ(mean_square_error({0.0, 1.0, 0.0}, ex), 0.0);
    EXPECT_NEAR(mean_square_error({0.1, 0.5, 0.3}, ex), (0.01 + 0.25 + 0.09) / 3, 1e-16);
}

TEST(noise, full_depolarization_gives_half) {
    IrisFixture f;
    std::mt19937_64 rng(1);
    const auto p = ref::random_params(21, rng);
    for (auto where : {NoiseInsertion::BeforeReadout, NoiseInsertion::AfterEachGate})
        EXPECT_NEAR(evaluate_cost(f.circuit, p, QuantumState(f.rho), NoiseConfig::depolarizing(0.0, where)), 0.5,
                    1e-14);
}

TEST(noise, cost_moves_affinely_toward_half) {
    IrisFixture f;
    std::mt19937_64 rng(2);
    const auto p = ref::random_params(21, rng);
    const QuantumState in(f.rho);
    const double c1 = evaluate_cost(f.circuit, p, in);
    const double gates = static_cast<double>(f.circuit.gates().size());
    for (double lambda : {0.999, 0.99, 0.9, 0.5}) {
        const double before = evaluate_cost(f.circuit, p, in, NoiseConfig::depolarizing(lambda));
        EXPECT_NEAR(before, lambda * c1 + (1 - lambda) * 0.5, 1e-10);
        // per-gate noise commutes past the unitaries and compounds
        const double lk = std::pow(lambda, gates);
        const double each =
            evaluate_cost(f.circuit, p, in, NoiseConfig::depolarizing(lambda, NoiseInsertion::AfterEachGate));
        EXPECT_NEAR(each, lk * c1 + (1 - lk) * 0.5, 1e-10);
    }
}

TEST(noise, config_validation) {
    EXPECT_THROW(NoiseConfig::depolarizing(1.01).validate(), std::invalid_argument);
    EXPECT_THROW(NoiseConfig::depolarizing(-1).validate(), std::invalid_argument);
    EXPECT_THROW(NoiseConfig::depolarizing(std::nan("")).validate(), std::invalid_argument);
    EXPECT_NO_THROW(NoiseConfig::depolarizing(0).validate());
}

TEST(training, identical_seeds_give_identical_traces) {
    const auto task = xor_task(CostKind::Fredkin, EncodingMode::Superposition, 60);
    const auto a = train(task);
    const auto b = train(task);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].cost, b.records[i].cost);
        EXPECT_EQ(a.records[i].params, b.records[i].params);
    }
    EXPECT_EQ(trace_csv(a), trace_csv(b));
    EXPECT_NE(trace_csv(train(xor_task(CostKind::Fredkin, EncodingMode::Superposition, 60, 8))), trace_csv(a));
}

TEST(training, probe_matches_finite_differences_along_a_run) {
    const auto task = xor_task(CostKind::Cnot, EncodingMode::Superposition, 50);
    const auto trace = train(task);
    const auto circuit = embed_cost(task.ansatz, task.cost);
    const auto input = make_training_input(task.train, task.ansatz.layout(), task.encoding);
    const CostModel model(circuit);
    double worst = 0;
    for (const auto &r : trace.records) {
        const auto g = model.gradient(r.params, input);
        const auto fd = finite_difference_gradient(circuit, r.params, input, 1e-5);
        for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(g[i] - fd[i]));
    }
    EXPECT_LE(worst, 1e-6);
}

TEST(training, encodings_give_the_same_trajectory) {
    for (auto cost : {CostKind::Cnot, CostKind::Fredkin}) {
        const auto ref_trace = train(xor_task(cost, EncodingMode::PerPoint, 150));
        for (auto mode : {EncodingMode::Mixed, EncodingMode::Superposition}) {
            const auto t = train(xor_task(cost, mode, 150));
            ASSERT_EQ(t.records.size(), ref_trace.records.size());
            double worst = 0;
            for (std::size_t i = 0; i < t.records.size(); ++i)
                for (std::size_t k = 0; k < 9; ++k)
                    worst = std::max(worst, std::abs(t.records[i].params[k] - ref_trace.records[i].params[k]));
            EXPECT_LE(worst, 1e-8) << to_string(cost) << " " << to_string(mode);
        }
    }
}

TEST(training, records_hold_parameters_before_each_update) {
    const auto task = xor_task(CostKind::Cnot, EncodingMode::Mixed, 5);
    const auto trace = train(task);
    ASSERT_EQ(trace.records.size(), 6u);
    EXPECT_EQ(trace.records[0].params, initial_parameters(9, task.seed));
    for (std::size_t i = 0; i < trace.records.size(); ++i) EXPECT_EQ(trace.records[i].iteration, i);
}

TEST(training, early_stop) {
    auto task = xor_task(CostKind::Cnot, EncodingMode::Superposition, 5000);
    task.stop_below = 0.3;
    const auto trace = train(task);
    EXPECT_LT(trace.final().cost, 0.3);
    EXPECT_GE(trace.records[trace.records.size() - 2].cost, 0.3);
}

TEST(training, non_finite_cost_is_an_error) {
    auto task = xor_task(CostKind::Cnot, EncodingMode::Mixed, 5);
    task.initial = ParameterVector(9, std::numeric_limits<double>::quiet_NaN());
    EXPECT_THROW(train(task), std::runtime_error);
    task.initial = ParameterVector(8, 0.0);
    EXPECT_THROW(train(task), std::invalid_argument);
}

TEST(training, sampled_mode_is_seeded) {
    const auto task = xor_task(CostKind::Cnot, EncodingMode::Sampled, 30);
    EXPECT_EQ(trace_csv(train(task)), trace_csv(train(task)));
}

TEST(experiments, iris_task_shape) {
    auto config = ExperimentConfig::defaults_for(Experiment::Iris);
    config.seed = 3;
    config.cost = CostKind::Fredkin;
    const auto task = make_task(config);
    EXPECT_EQ(task.train.size(), 70u);
    EXPECT_EQ(task.test.size(), 30u);
    EXPECT_EQ(task.encoding, EncodingMode::Mixed);
    EXPECT_EQ(task.adam.learning_rate, 1e-2);
    EXPECT_EQ(task.ansatz.num_qubits(), 6u);
}

TEST(experiments, config_errors) {
    auto config = ExperimentConfig::defaults_for(Experiment::Custom);
    EXPECT_THROW(make_task(config), std::invalid_argument);
    config.dataset = "/missing/data.csv";
    EXPECT_THROW(make_task(config), std::runtime_error);
}

TEST(experiments, manifest_echoes_config) {
    auto config = ExperimentConfig::defaults_for(Experiment::Xor);
    config.seed = 11;
    config.noise_lambda = 0.999;
    config.max_iterations = 3;
    const auto trace = train(make_task(config));
    const auto m = manifest_json(config, trace, "trace.csv");
    for (const char *key : {"\"seed\": 11", "\"noise\": 0.999", "\"max_iterations\": 3", "\"params\"",
                            "\"trace_file\": \"trace.csv\"", "\"encoding\": \"superposition\""})
        EXPECT_NE(m.find(key), std::string::npos) << key;
    EXPECT_EQ(trace_csv(trace).substr(0, 37), "iteration,cost,mse,train_acc,test_acc");
}

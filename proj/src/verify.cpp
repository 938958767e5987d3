#include "costembed/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "costembed/experiments.hpp"
#include "costembed/sim.hpp"

namespace costembed::verify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

PropertyResult at_most(std::string name, double err, double tol, std::string detail = {}) {
    return {std::move(name), err, tol, err <= tol, std::move(detail)};
}

ParameterVector random_params(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    ParameterVector p(n);
    for (auto &v : p) v = u(rng);
    return p;
}

EncodedExample random_example(std::size_t features, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(0.0, kHalfPi);
    std::bernoulli_distribution bit(0.5);
    EncodedExample ex;
    for (std::size_t j = 0; j < features; ++j) ex.angles.push_back(angle(rng));
    ex.label_bit = bit(rng) ? 1 : 0;
    return ex;
}

StateVector random_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a{{g(rng), g(rng)}, {g(rng), g(rng)}};
    const double norm = std::sqrt(std::norm(a[0]) + std::norm(a[1]));
    a[0] /= norm;
    a[1] /= norm;
    return StateVector(1, std::move(a));
}

StateVector single_qubit(double gamma) { return StateVector(1, {std::cos(gamma), std::sin(gamma)}); }

Circuit ansatz_for_case(std::size_t k, const RegisterOptions &opts) {
    return k % 2 == 0 ? build_xor_ansatz(opts) : build_iris_ansatz(opts);
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::vector<PropertyResult> oracles(const Options &opts) {
    std::vector<PropertyResult> out;
    std::mt19937_64 rng(opts.seed);

    {
        double worst = 0.0;
        for (std::size_t k = 0; k < 200; ++k) {
            const Circuit ansatz = ansatz_for_case(k, {});
            const Circuit embedded = embed_cost(ansatz, CostKind::Cnot);
            const auto params = random_params(ansatz.slots().size(), rng);
            const auto ex = random_example(ansatz.layout().data.size(), rng);
            const StateVector input = encode_point(ex, ansatz.layout());
            const double alpha =
                expectation_z(simulate(ansatz.bind(params), input), ansatz.layout().output);
            const double beta = ex.label_bit;
            const double cost = evaluate_cost(embedded, params, input);
            worst = std::max(worst, std::abs(cost - ((1.0 - 2.0 * beta) * alpha + beta)));
        }
        out.push_back(at_most("cnot cost equals (1-2b)a+b", worst, 1e-10, "200 cases"));
    }

    {
        double worst = 0.0;
        for (std::size_t k = 0; k < 200; ++k) {
            const Circuit ansatz = ansatz_for_case(k, {.ancilla = true});
            const Circuit embedded = embed_cost(ansatz, CostKind::Fredkin);
            const auto &layout = ansatz.layout();
            const auto params = random_params(ansatz.slots().size(), rng);
            const auto ex = random_example(layout.data.size(), rng);
            const StateVector phi = random_qubit(rng);
            // Data qubits first, then label, then ancilla, matching make_layout.
            StateVector input = single_qubit(ex.angles[0]);
            for (std::size_t j = 1; j < ex.angles.size(); ++j) input = tensor(input, single_qubit(ex.angles[j]));
            input = tensor(tensor(input, phi), StateVector(1));

            const auto after = to_density(simulate(ansatz.bind(params), input));
            const DensityMatrix rho_out = partial_trace(after, {layout.output});
            Complex overlap = 0.0;
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) overlap += std::conj(phi[r]) * rho_out(r, c) * phi[c];
            }
            const double expected = (1.0 - overlap.real()) / 2.0;
            worst = std::max(worst, std::abs(evaluate_cost(embedded, params, input) - expected));
        }
        out.push_back(at_most("fredkin cost equals (1-<phi|rho|phi>)/2", worst, 1e-10, "200 cases"));
    }

    {
        double e1 = 0.0, e2 = 0.0, e_out = 0.0, e_cost = 0.0;
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::uniform_real_distribution<double> phase(0.0, kTwoPi);
        // Output qubit is the high-order Kronecker factor: label = qubit 0, output = qubit 1.
        RegisterLayout layout{.data = {1}, .label = {0}, .index = {}, .ancilla = {}, .output = 1};
        const BoundCircuit cnot_cost = embed_cost(Circuit(layout), CostKind::Cnot).bind({});
        for (std::size_t k = 0; k < 100; ++k) {
            const double a = u01(rng);
            const double b = u01(rng) < 0.5 ? 0.0 : 1.0;
            const Complex eps = std::polar(u01(rng) * std::sqrt(a * (1.0 - a)), phase(rng));
            const Complex ec = std::conj(eps);
            const DensityMatrix rho0(1, {1.0 - a, -ec, eps, a});
            const DensityMatrix rho_phi(1, {1.0 - b, 0.0, 0.0, b});

            const DensityMatrix rho1 = tensor(rho_phi, rho0);
            const DensityMatrix want1(2, {(1 - a) * (1 - b), 0.0, -(1 - b) * ec, 0.0,
                                          0.0, (1 - a) * b, 0.0, -b * ec,
                                          (1 - b) * eps, 0.0, a * (1 - b), 0.0,
                                          0.0, b * eps, 0.0, a * b});
            e1 = std::max(e1, max_abs_diff(rho1, want1));

            const DensityMatrix rho2 = std::get<DensityMatrix>(simulate(cnot_cost, rho1));
            const DensityMatrix want2(2, {(1 - a) * (1 - b), 0.0, -(1 - b) * ec, 0.0,
                                          0.0, a * b, 0.0, b * eps,
                                          (1 - b) * eps, 0.0, a * (1 - b), 0.0,
                                          0.0, -b * ec, 0.0, (1 - a) * b});
            e2 = std::max(e2, max_abs_diff(rho2, want2));

            const DensityMatrix rho_out = partial_trace(rho2, {1});
            const DensityMatrix want_out(1, {(1 - a) * (1 - b) + a * b, -(1 - b) * ec + b * eps,
                                             (1 - b) * eps - b * ec, a * (1 - b) + (1 - a) * b});
            e_out = std::max(e_out, max_abs_diff(rho_out, want_out));
            e_cost = std::max(e_cost, std::abs(expectation_z(rho_out, 0) - ((1 - 2 * b) * a + b)));
        }
        out.push_back(at_most("cnot derivation rho_1", e1, 1e-12, "100 cases"));
        out.push_back(at_most("cnot derivation rho_2", e2, 1e-12, "100 cases"));
        out.push_back(at_most("cnot derivation rho_output", e_out, 1e-12, "100 cases"));
        out.push_back(at_most("cnot derivation P(|1>)", e_cost, 1e-12, "100 cases"));
    }
    return out;
}

std::vector<PropertyResult> gradients(const Options &opts) {
    std::vector<PropertyResult> out;
    std::mt19937_64 rng(opts.seed + 1);
    const double k = opts.flip_gradient_sign ? -kGradientScale : kGradientScale;
    double k_low = 1e300, k_high = -1e300;
    for (const bool iris : {false, true}) {
        for (const CostKind cost : {CostKind::Cnot, CostKind::Fredkin}) {
            const RegisterOptions ropts{.ancilla = cost == CostKind::Fredkin};
            const Circuit ansatz = iris ? build_iris_ansatz(ropts) : build_xor_ansatz(ropts);
            const CostModel model(embed_cost(ansatz, cost));
            double worst = 0.0;
            for (std::size_t c = 0; c < 20; ++c) {
                const auto params = random_params(model.num_params(), rng);
                const auto ex = random_example(ansatz.layout().data.size(), rng);
                const TrainingInput input{{encode_point(ex, ansatz.layout()), 1.0}};
                const auto probe = model.gradient(params, input, {}, k);
                const auto fd = finite_difference_gradient(model.circuit(), params, input, 1e-5);
                double zz = 0.0, fz = 0.0;
                for (std::size_t j = 0; j < fd.size(); ++j) {
                    worst = std::max(worst, std::abs(probe[j] - fd[j]));
                    const double z = probe[j] / k;
                    zz += z * z;
                    fz += fd[j] * z;
                }
                if (zz > 1e-8) {
                    k_low = std::min(k_low, fz / zz);
                    k_high = std::max(k_high, fz / zz);
                }
            }
            const std::string name = std::string(iris ? "iris" : "xor") + " " + std::string(to_string(cost)) +
                                     " probe vs finite difference";
            out.push_back(at_most(name, worst, 1e-6,
                                  std::to_string(model.num_params()) + " slots x 20 points, h=1e-5"));
        }
    }
    out.push_back(at_most("fitted k agrees with the fixed constant",
                          std::max(std::abs(k_low - kGradientScale), std::abs(k_high - kGradientScale)), 1e-4,
                          "fitted k in [" + fixed(k_low) + ", " + fixed(k_high) + "]"));
    return out;
}

std::vector<PropertyResult> encodings(const Options &opts) {
    std::vector<PropertyResult> out;
    std::mt19937_64 rng(opts.seed + 2);
    const auto examples = xor_examples();
    double mix_vs_mean = 0.0, sup_vs_mix = 0.0, grad_diff = 0.0, no_index = 0.0, prep = 0.0;
    for (const CostKind cost : {CostKind::Cnot, CostKind::Fredkin}) {
        const RegisterOptions plain{.ancilla = cost == CostKind::Fredkin};
        RegisterOptions indexed = plain;
        indexed.index_qubits = index_width(examples.size());
        const Circuit a_plain = build_xor_ansatz(plain);
        const Circuit a_index = build_xor_ansatz(indexed);
        const CostModel m_plain(embed_cost(a_plain, cost));
        const CostModel m_index(embed_cost(a_index, cost));

        const auto per_point = make_training_input(examples, a_plain.layout(), EncodingMode::PerPoint);
        const auto mixed = make_training_input(examples, a_plain.layout(), EncodingMode::Mixed);
        const auto sup = make_training_input(examples, a_index.layout(), EncodingMode::Superposition);
        const TrainingInput sup_plain{{build_superposition_without_index(examples, a_plain.layout()), 1.0}};

        const auto prepared = simulate(xor_superposition_preparation(a_index.layout()).bind({}),
                                       StateVector(a_index.num_qubits()));
        prep = std::max(prep, max_abs_diff(std::get<StateVector>(prepared), std::get<StateVector>(sup[0].state)));

        for (std::size_t c = 0; c < 20; ++c) {
            const auto params = random_params(m_plain.num_params(), rng);
            const double c_pp = m_plain.cost(params, per_point);
            const double c_mix = m_plain.cost(params, mixed);
            const double c_sup = m_index.cost(params, sup);
            mix_vs_mean = std::max(mix_vs_mean, std::abs(c_mix - c_pp));
            sup_vs_mix = std::max(sup_vs_mix, std::abs(c_sup - c_mix));
            no_index = std::max(no_index, std::abs(m_plain.cost(params, sup_plain) - c_mix));

            const auto g_pp = m_plain.gradient(params, per_point);
            const auto g_mix = m_plain.gradient(params, mixed);
            const auto g_sup = m_index.gradient(params, sup);
            for (std::size_t j = 0; j < g_pp.size(); ++j) {
                grad_diff = std::max({grad_diff, std::abs(g_pp[j] - g_mix[j]), std::abs(g_sup[j] - g_mix[j])});
            }
        }
    }
    out.push_back(at_most("mixed-state cost equals mean per-point cost", mix_vs_mean, 1e-12, "xor, 40 cases"));
    out.push_back(at_most("indexed superposition cost equals mixed-state cost", sup_vs_mix, 1e-12, "xor, 40 cases"));
    out.push_back(at_most("gradients agree across encodings", grad_diff, 1e-10, "xor, 40 cases"));
    out.push_back(at_most("preparation circuit yields the indexed superposition", prep, 1e-12));
    out.push_back({"superposition without index differs from mixed-state cost", no_index, 1e-3, no_index > 1e-3,
                   "max discrepancy must exceed tolerance"});
    return out;
}

bool all_passed(const std::vector<PropertyResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult &r) { return r.passed; });
}

}  // namespace costembed::verify

// Serial reference kernels against the OpenMP versions. Sizes cover pure
// states and density matrices (2n vector qubits) of the training registers.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "costembed/kernels.hpp"

using namespace costembed;

namespace {

std::vector<Complex> random_amps(unsigned qubits) {
    std::mt19937_64 rng(qubits);
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << qubits);
    for (auto &x : a) x = {g(rng), g(rng)};
    return a;
}

template <auto Kernel>
void controlled_1q(benchmark::State &state) {
    const auto q = static_cast<unsigned>(state.range(0));
    auto amps = random_amps(q);
    const Mat2 m = pauli_exponential(Pauli::Y, 0.3);
    for (auto _ : state) {
        Kernel(amps, q / 2, std::uint64_t{1} << (q - 1), m);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void controlled_swap(benchmark::State &state) {
    const auto q = static_cast<unsigned>(state.range(0));
    auto amps = random_amps(q);
    for (auto _ : state) {
        Kernel(amps, 0, q - 2, std::uint64_t{1} << (q - 1));
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void probability(benchmark::State &state) {
    const auto q = static_cast<unsigned>(state.range(0));
    const auto amps = random_amps(q);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(amps, q / 2));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

// 6 = a pure Iris register, 12 and 14 = its density matrix with and
// without the gradient probe, 20 = a large vector
#define SIZES DenseRange(6, 6)->Arg(10)->Arg(12)->Arg(14)->Arg(16)->Arg(20)

BENCHMARK(controlled_1q<kernels::serial::apply_controlled_1q>)->Name("controlled_1q/serial")->SIZES;
BENCHMARK(controlled_1q<kernels::omp::apply_controlled_1q>)->Name("controlled_1q/omp")->SIZES;
BENCHMARK(controlled_swap<kernels::serial::apply_controlled_swap>)->Name("controlled_swap/serial")->SIZES;
BENCHMARK(controlled_swap<kernels::omp::apply_controlled_swap>)->Name("controlled_swap/omp")->SIZES;
BENCHMARK(probability<kernels::serial::probability_one>)->Name("probability_one/serial")->SIZES;
BENCHMARK(probability<kernels::omp::probability_one>)->Name("probability_one/omp")->SIZES;

}  // namespace

BENCHMARK_MAIN();

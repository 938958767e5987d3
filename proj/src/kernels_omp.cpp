#include "costembed/kernels.hpp"

#include <cstdint>

namespace costembed::kernels::omp {

namespace {

// Index of the k-th basis state with a zero at `bit_pos`.
inline std::uint64_t insert_zero(std::uint64_t k, unsigned bit_pos) {
    const std::uint64_t low = k & ((std::uint64_t{1} << bit_pos) - 1);
    return ((k >> bit_pos) << (bit_pos + 1)) | low;
}

}  // namespace

void apply_controlled_1q(std::span<Complex> amps, unsigned target, std::uint64_t control_mask, const Mat2 &m) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    Complex *data = amps.data();
    const Complex m0 = m[0], m1 = m[1], m2 = m[2], m3 = m[3];
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::uint64_t i = insert_zero(static_cast<std::uint64_t>(k), target);
        if ((i & control_mask) != control_mask) {
            continue;
        }
        const Complex a0 = data[i];
        const Complex a1 = data[i | bit];
        data[i] = m0 * a0 + m1 * a1;
        data[i | bit] = m2 * a0 + m3 * a1;
    }
}

void apply_controlled_swap(std::span<Complex> amps, unsigned a, unsigned b, std::uint64_t control_mask) {
    const unsigned lo = a < b ? a : b;
    const unsigned hi = a < b ? b : a;
    const std::uint64_t bit_a = std::uint64_t{1} << a;
    const std::uint64_t bit_b = std::uint64_t{1} << b;
    const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
    Complex *data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t k = 0; k < quarter; ++k) {
        const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
        if ((base & control_mask) != control_mask) {
            continue;
        }
        std::swap(data[base | bit_a], data[base | bit_b]);
    }
}

double probability_one(std::span<const Complex> amps, unsigned q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    const Complex *data = amps.data();
    double total = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (amps.size() >= kParallelThreshold)
    for (std::int64_t k = 0; k < half; ++k) {
        total += std::norm(data[insert_zero(static_cast<std::uint64_t>(k), q) | bit]);
    }
    return total;
}

void affine_diagonal(std::span<Complex> entries, std::size_t dim, double scale, double shift) {
    const auto size = static_cast<std::int64_t>(entries.size());
    Complex *data = entries.data();
#pragma omp parallel for schedule(static) if (entries.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < size; ++i) {
        data[i] *= scale;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        data[i * dim + i] += shift;
    }
}

}  // namespace costembed::kernels::omp

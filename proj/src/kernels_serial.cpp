#include "costembed/kernels.hpp"

namespace costembed::kernels::serial {

void apply_controlled_1q(std::span<Complex> amps, unsigned target, std::uint64_t control_mask, const Mat2 &m) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) != 0 || (i & control_mask) != control_mask) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | bit];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void apply_controlled_swap(std::span<Complex> amps, unsigned a, unsigned b, std::uint64_t control_mask) {
    const std::uint64_t bit_a = std::uint64_t{1} << a;
    const std::uint64_t bit_b = std::uint64_t{1} << b;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        // Visit each |..1_a..0_b..> <-> |..0_a..1_b..> pair once.
        if ((i & bit_a) == 0 || (i & bit_b) != 0 || (i & control_mask) != control_mask) {
            continue;
        }
        const std::uint64_t j = (i & ~bit_a) | bit_b;
        std::swap(amps[i], amps[j]);
    }
}

double probability_one(std::span<const Complex> amps, unsigned q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    double total = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            total += std::norm(amps[i]);
        }
    }
    return total;
}

void affine_diagonal(std::span<Complex> entries, std::size_t dim, double scale, double shift) {
    for (auto &e : entries) {
        e *= scale;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        entries[i * dim + i] += shift;
    }
}

}  // namespace costembed::kernels::serial

#pragma once

// Amplitude kernels over a flat complex vector of 2^n entries.
//
// `serial` is the straightforward reference; `omp` is the OpenMP version the
// simulator uses. Both must agree bit-for-bit on the same inputs since each
// output entry is computed by the same arithmetic in both.
//
// A density matrix of n qubits is handled as a vector of 2n qubits: column
// bits are qubits [0, n), row bits are qubits [n, 2n).

#include <cstdint>
#include <span>

#include "costembed/gate.hpp"

namespace costembed::kernels {

namespace serial {

/// Applies `m` to `target` on every basis pair whose bits in `control_mask` are all set.
void apply_controlled_1q(std::span<Complex> amps, unsigned target, std::uint64_t control_mask, const Mat2 &m);

/// Swaps qubits `a` and `b` on the subspace selected by `control_mask`.
void apply_controlled_swap(std::span<Complex> amps, unsigned a, unsigned b, std::uint64_t control_mask);

/// Sum of |amp|^2 over indices with bit `q` set.
double probability_one(std::span<const Complex> amps, unsigned q);

/// amps = scale * amps + shift on the diagonal of a dim x dim row-major matrix.
void affine_diagonal(std::span<Complex> entries, std::size_t dim, double scale, double shift);

}  // namespace serial

namespace omp {

void apply_controlled_1q(std::span<Complex> amps, unsigned target, std::uint64_t control_mask, const Mat2 &m);
void apply_controlled_swap(std::span<Complex> amps, unsigned a, unsigned b, std::uint64_t control_mask);
double probability_one(std::span<const Complex> amps, unsigned q);
void affine_diagonal(std::span<Complex> entries, std::size_t dim, double scale, double shift);

/// Vectors shorter than this run without spawning a parallel region.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

}  // namespace omp

}  // namespace costembed::kernels

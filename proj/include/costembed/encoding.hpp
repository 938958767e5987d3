#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "costembed/circuit.hpp"
#include "costembed/dataset.hpp"
#include "costembed/state.hpp"

namespace costembed {

/// Margin keeping normalized angles inside the open interval (0, pi/2).
inline constexpr double kAngleMargin = 1e-3;

/// Per-feature affine map onto [margin, pi/2 - margin], fitted on one split
/// and reusable on another. Values outside the fitted range are clamped to
/// [0, pi/2].
class FeatureScaling {
  public:
    /// Throws std::invalid_argument on an empty dataset or a constant column.
    static FeatureScaling fit(const Dataset &data, double margin = kAngleMargin);

    Dataset apply(const Dataset &data) const;

    const std::vector<double> &minimum() const { return min_; }
    const std::vector<double> &maximum() const { return max_; }

  private:
    std::vector<double> min_;
    std::vector<double> max_;
    double margin_ = kAngleMargin;
};

/// Fit-and-apply on the same data.
Dataset normalize_features(const Dataset &data, double margin = kAngleMargin);

/// Angles for one data point plus its binary label.
struct EncodedExample {
    std::vector<double> angles;
    int label_bit = 0;
    std::size_t index = 0;
};

/// Maps a two-class label set onto label bits: the smaller class is 0.
class BinaryLabelMap {
  public:
    /// Throws std::invalid_argument unless `classes` has exactly two entries.
    explicit BinaryLabelMap(const std::set<int> &classes);

    int bit(int label) const;
    int negative() const { return negative_; }
    int positive() const { return positive_; }

  private:
    int negative_;
    int positive_;
};

/// Features must already be angles in [0, pi/2].
std::vector<EncodedExample> encode_angles(const Dataset &angles, const BinaryLabelMap &labels);

/// Features must be 0 or 1; they map to angles 0 and pi/2.
std::vector<EncodedExample> encode_digital(const Dataset &bits, const BinaryLabelMap &labels);

/// Product state over the layout: data qubit j holds cos(g_j)|0> + sin(g_j)|1>,
/// the label qubit holds |beta>, the index register (if any) holds the
/// example's ordinal, every other qubit is |0>. Throws std::invalid_argument
/// for an angle outside [0, pi/2] or a feature count that differs from the
/// data register.
StateVector encode_point(const EncodedExample &example, const RegisterLayout &layout);

/// (1/N) sum_i |chi_i><chi_i|. Throws std::invalid_argument when empty.
DensityMatrix build_mixed_state(const std::vector<EncodedExample> &examples, const RegisterLayout &layout);

/// Width of the ordinal register for N points, ceil(log2 N).
std::size_t index_width(std::size_t num_points);

/// Repeats examples from the front until the count is a power of two. The
/// repeats keep their original ordinal in `index` but get fresh positions.
std::vector<EncodedExample> pad_to_power_of_two(const std::vector<EncodedExample> &examples);

/// (1/sqrt(N)) sum_i |eps_i>|psi_i>|phi_i>|0...>, index register holding i.
/// Examples are padded to a power of two first; the layout's index register
/// must have index_width(padded N) qubits. Digital examples only.
StateVector build_superposition_with_index(const std::vector<EncodedExample> &examples,
                                           const RegisterLayout &layout);

/// Normalized uniform superposition of the examples without an ordinal
/// register. Cross terms survive in this state.
StateVector build_superposition_without_index(const std::vector<EncodedExample> &examples,
                                              const RegisterLayout &layout);

/// H on the data qubits, CNOT data -> label to write XOR, CNOT data[j] ->
/// index[j] to copy each input into the ordinal register.
Circuit xor_superposition_preparation(const RegisterLayout &layout);

/// Seeded i.i.d. uniform draws from a fixed example list.
class EnsembleSampler {
  public:
    EnsembleSampler(std::vector<EncodedExample> examples, std::uint64_t seed);

    const EncodedExample &next();
    std::size_t next_index();

  private:
    std::vector<EncodedExample> examples_;
    std::mt19937_64 rng_;
    std::uniform_int_distribution<std::size_t> pick_;
};

}  // namespace costembed

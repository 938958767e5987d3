#include "costembed/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace costembed {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kDigitalTol = 1e-12;

bool is_digital_angle(double a) { return std::abs(a) <= kDigitalTol || std::abs(a - kHalfPi) <= kDigitalTol; }

// Amplitude of every single-qubit factor, indexed by qubit.
struct ProductFactors {
    std::vector<Complex> zero;
    std::vector<Complex> one;
};

ProductFactors factors_for(const EncodedExample &example, const RegisterLayout &layout, std::size_t ordinal) {
    if (example.angles.size() != layout.data.size()) {
        throw std::invalid_argument("example has " + std::to_string(example.angles.size()) + " features, register has " +
                                    std::to_string(layout.data.size()) + " data qubits");
    }
    if (example.label_bit != 0 && example.label_bit != 1) {
        throw std::invalid_argument("label bit must be 0 or 1");
    }
    if (layout.label.empty()) {
        throw std::invalid_argument("layout has no label qubit");
    }
    const std::size_t n = layout.num_qubits();
    ProductFactors f{std::vector<Complex>(n, 1.0), std::vector<Complex>(n, 0.0)};
    for (std::size_t j = 0; j < layout.data.size(); ++j) {
        const double g = example.angles[j];
        if (!(g >= 0.0 && g <= kHalfPi)) {
            throw std::invalid_argument("angle " + std::to_string(g) + " outside [0, pi/2]");
        }
        f.zero[layout.data[j]] = std::cos(g);
        f.one[layout.data[j]] = std::sin(g);
    }
    if (example.label_bit == 1) {
        f.zero[layout.label.front()] = 0.0;
        f.one[layout.label.front()] = 1.0;
    }
    for (std::size_t k = 0; k < layout.index.size(); ++k) {
        if ((ordinal >> k) & 1U) {
            f.zero[layout.index[k]] = 0.0;
            f.one[layout.index[k]] = 1.0;
        }
    }
    return f;
}

std::vector<Complex> product_amplitudes(const ProductFactors &f) {
    const std::size_t n = f.zero.size();
    std::vector<Complex> amps(std::size_t{1} << n);
    for (std::size_t b = 0; b < amps.size(); ++b) {
        Complex a = 1.0;
        for (std::size_t q = 0; q < n && a != 0.0; ++q) {
            a *= ((b >> q) & 1U) ? f.one[q] : f.zero[q];
        }
        amps[b] = a;
    }
    return amps;
}

}  // namespace

FeatureScaling FeatureScaling::fit(const Dataset &data, double margin) {
    data.validate();
    if (data.empty()) {
        throw std::invalid_argument("cannot fit normalization on an empty dataset");
    }
    if (!(margin >= 0.0 && margin < kHalfPi / 2.0)) {
        throw std::invalid_argument("normalization margin out of range");
    }
    FeatureScaling s;
    s.margin_ = margin;
    s.min_.assign(data.feature_count, 0.0);
    s.max_.assign(data.feature_count, 0.0);
    for (std::size_t j = 0; j < data.feature_count; ++j) {
        double lo = data.features[0][j];
        double hi = lo;
        for (const auto &row : data.features) {
            lo = std::min(lo, row[j]);
            hi = std::max(hi, row[j]);
        }
        if (!(hi > lo)) {
            throw std::invalid_argument("feature column " + std::to_string(j) + " is constant");
        }
        s.min_[j] = lo;
        s.max_[j] = hi;
    }
    return s;
}

Dataset FeatureScaling::apply(const Dataset &data) const {
    if (data.feature_count != min_.size()) {
        throw std::invalid_argument("feature count differs from the fitted scaling");
    }
    Dataset out = data;
    const double span = kHalfPi - 2.0 * margin_;
    for (auto &row : out.features) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            const double t = (row[j] - min_[j]) / (max_[j] - min_[j]);
            row[j] = std::clamp(margin_ + t * span, 0.0, kHalfPi);
        }
    }
    return out;
}

Dataset normalize_features(const Dataset &data, double margin) { return FeatureScaling::fit(data, margin).apply(data); }

BinaryLabelMap::BinaryLabelMap(const std::set<int> &classes) {
    if (classes.size() != 2) {
        throw std::invalid_argument("binary classification needs exactly two classes, got " +
                                    std::to_string(classes.size()));
    }
    negative_ = *classes.begin();
    positive_ = *classes.rbegin();
}

int BinaryLabelMap::bit(int label) const {
    if (label == negative_) return 0;
    if (label == positive_) return 1;
    throw std::invalid_argument("label " + std::to_string(label) + " is not one of the two classes");
}

std::vector<EncodedExample> encode_angles(const Dataset &angles, const BinaryLabelMap &labels) {
    angles.validate();
    std::vector<EncodedExample> out;
    out.reserve(angles.size());
    for (std::size_t i = 0; i < angles.size(); ++i) {
        for (double g : angles.features[i]) {
            if (!(g >= 0.0 && g <= kHalfPi)) {
                throw std::invalid_argument("angle " + std::to_string(g) + " outside [0, pi/2]");
            }
        }
        out.push_back({angles.features[i], labels.bit(angles.labels[i]), i});
    }
    return out;
}

std::vector<EncodedExample> encode_digital(const Dataset &bits, const BinaryLabelMap &labels) {
    bits.validate();
    std::vector<EncodedExample> out;
    out.reserve(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        EncodedExample ex{{}, labels.bit(bits.labels[i]), i};
        for (double v : bits.features[i]) {
            if (v != 0.0 && v != 1.0) {
                throw std::invalid_argument("digital encoding needs 0/1 features");
            }
            ex.angles.push_back(v * kHalfPi);
        }
        out.push_back(std::move(ex));
    }
    return out;
}

StateVector encode_point(const EncodedExample &example, const RegisterLayout &layout) {
    const auto f = factors_for(example, layout, example.index);
    return StateVector(layout.num_qubits(), product_amplitudes(f));
}

DensityMatrix build_mixed_state(const std::vector<EncodedExample> &examples, const RegisterLayout &layout) {
    if (examples.empty()) {
        throw std::invalid_argument("mixed state of an empty dataset");
    }
    const std::size_t n = layout.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> entries(dim * dim);
    const double w = 1.0 / static_cast<double>(examples.size());
    for (const auto &ex : examples) {
        const StateVector psi = encode_point(ex, layout);
        for (std::size_t r = 0; r < dim; ++r) {
            if (psi[r] == 0.0) continue;
            const Complex wr = w * psi[r];
            for (std::size_t c = 0; c < dim; ++c) {
                entries[r * dim + c] += wr * std::conj(psi[c]);
            }
        }
    }
    return DensityMatrix(n, std::move(entries));
}

std::size_t index_width(std::size_t num_points) {
    std::size_t w = 0;
    while ((std::size_t{1} << w) < num_points) ++w;
    return w;
}

std::vector<EncodedExample> pad_to_power_of_two(const std::vector<EncodedExample> &examples) {
    std::vector<EncodedExample> out = examples;
    const std::size_t target = std::size_t{1} << index_width(examples.size());
    for (std::size_t k = 0; out.size() < target; ++k) {
        out.push_back(examples[k % examples.size()]);
    }
    return out;
}

StateVector build_superposition_with_index(const std::vector<EncodedExample> &examples,
                                           const RegisterLayout &layout) {
    if (examples.empty()) {
        throw std::invalid_argument("superposition of an empty dataset");
    }
    for (const auto &ex : examples) {
        for (double g : ex.angles) {
            if (!is_digital_angle(g)) {
                throw std::invalid_argument("superposition encoding needs digital (basis-state) features");
            }
        }
    }
    const auto padded = pad_to_power_of_two(examples);
    if (layout.index.size() != index_width(padded.size())) {
        throw std::invalid_argument("index register needs " + std::to_string(index_width(padded.size())) +
                                    " qubits, layout has " + std::to_string(layout.index.size()));
    }
    const std::size_t n = layout.num_qubits();
    std::vector<Complex> amps(std::size_t{1} << n);
    const double w = 1.0 / std::sqrt(static_cast<double>(padded.size()));
    for (std::size_t i = 0; i < padded.size(); ++i) {
        const auto term = product_amplitudes(factors_for(padded[i], layout, i));
        for (std::size_t b = 0; b < amps.size(); ++b) amps[b] += w * term[b];
    }
    return StateVector(n, std::move(amps));
}

StateVector build_superposition_without_index(const std::vector<EncodedExample> &examples,
                                              const RegisterLayout &layout) {
    if (examples.empty()) {
        throw std::invalid_argument("superposition of an empty dataset");
    }
    if (!layout.index.empty()) {
        throw std::invalid_argument("layout carries an index register");
    }
    const std::size_t n = layout.num_qubits();
    std::vector<Complex> amps(std::size_t{1} << n);
    for (const auto &ex : examples) {
        const auto term = product_amplitudes(factors_for(ex, layout, 0));
        for (std::size_t b = 0; b < amps.size(); ++b) amps[b] += term[b];
    }
    double norm = 0.0;
    for (const auto &a : amps) norm += std::norm(a);
    if (norm <= 0.0) {
        throw std::invalid_argument("examples cancel to the zero vector");
    }
    for (auto &a : amps) a /= std::sqrt(norm);
    return StateVector(n, std::move(amps));
}

Circuit xor_superposition_preparation(const RegisterLayout &layout) {
    if (layout.data.size() != 2 || layout.index.size() != 2 || layout.label.empty()) {
        throw std::invalid_argument("XOR preparation needs 2 data, 2 index and 1 label qubit");
    }
    Circuit c(layout);
    for (auto q : layout.data) c.append(gates::h(q));
    for (auto q : layout.data) c.append(gates::cnot(q, layout.label.front()));
    for (std::size_t j = 0; j < 2; ++j) c.append(gates::cnot(layout.data[j], layout.index[j]));
    return c;
}

EnsembleSampler::EnsembleSampler(std::vector<EncodedExample> examples, std::uint64_t seed)
    : examples_(std::move(examples)), rng_(seed), pick_(0, examples_.empty() ? 0 : examples_.size() - 1) {
    if (examples_.empty()) {
        throw std::invalid_argument("cannot sample from an empty dataset");
    }
}

std::size_t EnsembleSampler::next_index() { return pick_(rng_); }

const EncodedExample &EnsembleSampler::next() { return examples_[next_index()]; }

}  // namespace costembed

#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string_view>
#include <vector>

namespace costembed {

/// Feature rows with integer class labels. All rows share `feature_count`.
struct Dataset {
    std::vector<std::vector<double>> features;
    std::vector<int> labels;
    std::size_t feature_count = 0;

    std::size_t size() const { return labels.size(); }
    bool empty() const { return labels.empty(); }
    std::set<int> class_set() const;

    void push_back(std::vector<double> row, int label);
    /// Throws std::invalid_argument on ragged rows or row/label count mismatch.
    void validate() const;
};

struct CsvOptions {
    bool has_header = false;
};

/// Feature columns followed by an integer label column, one row per line.
Dataset parse_csv(std::string_view text, const CsvOptions &opts = {});
/// Throws std::runtime_error naming the path when the file cannot be read.
Dataset read_csv(const std::filesystem::path &path, const CsvOptions &opts = {});

/// Rows whose label is in `classes`, in original order.
Dataset select_classes(const Dataset &data, const std::set<int> &classes);

struct Split {
    Dataset train;
    Dataset test;
};

/// Per-class shuffled split: round(train_fraction * class size) rows of each
/// class go to `train`. Rows keep their relative order within each part.
Split stratified_split(const Dataset &data, double train_fraction, std::uint64_t seed);

/// Two-input XOR truth table. Row i has feature j equal to bit j of i.
Dataset xor_dataset();

/// 150-row Iris table shipped in the data directory (labels 0, 1, 2).
Dataset load_bundled_iris();
std::filesystem::path bundled_iris_path();

}  // namespace costembed

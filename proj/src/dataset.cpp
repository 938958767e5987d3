#include "costembed/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace costembed {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> cells;
    while (true) {
        const auto comma = line.find(',');
        cells.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return cells;
}

template <typename T>
T parse_number(std::string_view cell, std::size_t line_no) {
    T value{};
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
        throw std::invalid_argument("csv line " + std::to_string(line_no) + ": cannot parse '" + std::string(cell) +
                                    "'");
    }
    return value;
}

}  // namespace

std::set<int> Dataset::class_set() const { return {labels.begin(), labels.end()}; }

void Dataset::push_back(std::vector<double> row, int label) {
    if (labels.empty() && features.empty()) {
        feature_count = row.size();
    } else if (row.size() != feature_count) {
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " features, expected " +
                                    std::to_string(feature_count));
    }
    features.push_back(std::move(row));
    labels.push_back(label);
}

void Dataset::validate() const {
    if (features.size() != labels.size()) {
        throw std::invalid_argument("feature rows and labels differ in count");
    }
    for (const auto &row : features) {
        if (row.size() != feature_count) {
            throw std::invalid_argument("ragged feature rows");
        }
    }
}

Dataset parse_csv(std::string_view text, const CsvOptions &opts) {
    Dataset data;
    std::size_t line_no = 0;
    bool header_pending = opts.has_header;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        const auto cells = split_commas(line);
        if (cells.size() < 2) {
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": need features and a label");
        }
        std::vector<double> row;
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
            row.push_back(parse_number<double>(cells[i], line_no));
        }
        const int label = parse_number<int>(cells.back(), line_no);
        try {
            data.push_back(std::move(row), label);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return data;
}

Dataset read_csv(const std::filesystem::path &path, const CsvOptions &opts) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read dataset " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), opts);
}

Dataset select_classes(const Dataset &data, const std::set<int> &classes) {
    Dataset out;
    out.feature_count = data.feature_count;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (classes.count(data.labels[i])) {
            out.push_back(data.features[i], data.labels[i]);
        }
    }
    return out;
}

Split stratified_split(const Dataset &data, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::invalid_argument("train fraction must lie in (0, 1)");
    }
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < data.size(); ++i) by_class[data.labels[i]].push_back(i);

    std::mt19937_64 rng(seed);
    std::vector<bool> in_train(data.size(), false);
    for (auto &[label, rows] : by_class) {
        std::shuffle(rows.begin(), rows.end(), rng);
        const auto n_train = static_cast<std::size_t>(std::lround(train_fraction * static_cast<double>(rows.size())));
        for (std::size_t k = 0; k < n_train; ++k) in_train[rows[k]] = true;
    }
    Split split;
    split.train.feature_count = split.test.feature_count = data.feature_count;
    for (std::size_t i = 0; i < data.size(); ++i) {
        (in_train[i] ? split.train : split.test).push_back(data.features[i], data.labels[i]);
    }
    return split;
}

Dataset xor_dataset() {
    Dataset data;
    for (int i = 0; i < 4; ++i) {
        const int a = i & 1;
        const int b = (i >> 1) & 1;
        data.push_back({static_cast<double>(a), static_cast<double>(b)}, a ^ b);
    }
    return data;
}

std::filesystem::path bundled_iris_path() { return std::filesystem::path(COSTEMBED_DATA_DIR) / "iris.csv"; }

Dataset load_bundled_iris() { return read_csv(bundled_iris_path()); }

}  // namespace costembed

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace costembed::verify {

struct PropertyResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct Options {
    std::uint64_t seed = 20200131;
    /// Fault injection: negates the gradient constant so the suite must fail.
    bool flip_gradient_sign = false;
};

/// CNOT-cost and swap-test closed forms, and the two-qubit CNOT-cost
/// derivation replayed matrix by matrix.
std::vector<PropertyResult> oracles(const Options &opts = {});

/// Probe gradients against central finite differences on every slot of both
/// ansaetze and both costs, plus the spread of the fitted scale constant.
std::vector<PropertyResult> gradients(const Options &opts = {});

/// Mixed-state, per-point and indexed-superposition costs and gradients on
/// XOR, and the no-index counterexample.
std::vector<PropertyResult> encodings(const Options &opts = {});

bool all_passed(const std::vector<PropertyResult> &results);

}  // namespace costembed::verify

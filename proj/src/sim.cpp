#include "costembed/sim.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "costembed/kernels.hpp"

namespace costembed {

namespace {

void check_in_range(const Gate &gate, std::size_t n) {
    if (gate.min_register_width() > n) {
        throw std::out_of_range(std::string(to_string(gate.kind)) + " addresses a qubit outside a " +
                                std::to_string(n) + "-qubit register");
    }
}

std::uint64_t mask_of(const std::vector<QubitIndex> &qubits, unsigned offset) {
    std::uint64_t mask = 0;
    for (auto q : qubits) {
        mask |= std::uint64_t{1} << (q + offset);
    }
    return mask;
}

Mat2 conj(const Mat2 &m) { return {std::conj(m[0]), std::conj(m[1]), std::conj(m[2]), std::conj(m[3])}; }

// Applies the gate to the bits starting at `offset` of a flat vector.
void apply_to_bits(std::span<Complex> amps, const Gate &gate, unsigned offset, bool conjugate) {
    const std::uint64_t controls = mask_of(gate.controls, offset);
    if (gate.kind == GateKind::CSWAP) {
        kernels::omp::apply_controlled_swap(amps, static_cast<unsigned>(gate.targets[0]) + offset,
                                            static_cast<unsigned>(gate.targets[1]) + offset, controls);
        return;
    }
    const Mat2 m = conjugate ? conj(gate.target_matrix()) : gate.target_matrix();
    kernels::omp::apply_controlled_1q(amps, static_cast<unsigned>(gate.targets[0]) + offset, controls, m);
}

void check_keep(const std::vector<QubitIndex> &keep, std::size_t n) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace needs at least one kept qubit");
    }
    std::vector<QubitIndex> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("partial_trace keep list has duplicates");
    }
    if (sorted.back() >= n) {
        throw std::out_of_range("partial_trace keep index out of range");
    }
}

// Spreads the low bits of `value` onto the positions in `positions`.
std::size_t scatter_bits(std::size_t value, const std::vector<QubitIndex> &positions) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if ((value >> j) & 1U) {
            out |= std::size_t{1} << positions[j];
        }
    }
    return out;
}

}  // namespace

namespace detail {

void apply_gate_inplace(StateVector &psi, const Gate &gate) {
    check_in_range(gate, psi.num_qubits());
    apply_to_bits(psi.mutable_amplitudes(), gate, 0, false);
}

void apply_gate_inplace(DensityMatrix &rho, const Gate &gate) {
    check_in_range(gate, rho.num_qubits());
    const auto n = static_cast<unsigned>(rho.num_qubits());
    // Row bits carry G, column bits carry conj(G): rho' = G rho G^dagger.
    apply_to_bits(rho.mutable_entries(), gate, n, false);
    apply_to_bits(rho.mutable_entries(), gate, 0, true);
}

void depolarize_inplace(DensityMatrix &rho, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("depolarizing lambda must lie in [0, 1]");
    }
    const double shift = (1.0 - lambda) / static_cast<double>(rho.dimension());
    kernels::omp::affine_diagonal(rho.mutable_entries(), rho.dimension(), lambda, shift);
}

}  // namespace detail

StateVector apply_gate(const StateVector &psi, const Gate &gate) {
    StateVector out = psi;
    detail::apply_gate_inplace(out, gate);
    return out;
}

DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &gate) {
    DensityMatrix out = rho;
    detail::apply_gate_inplace(out, gate);
    return out;
}

QuantumState apply_gate(const QuantumState &state, const Gate &gate) {
    return std::visit([&](const auto &s) -> QuantumState { return apply_gate(s, gate); }, state);
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    const std::size_t n = a.num_qubits() + b.num_qubits();
    std::vector<Complex> amps(std::size_t{1} << n);
    for (std::size_t hi = 0; hi < b.dimension(); ++hi) {
        for (std::size_t lo = 0; lo < a.dimension(); ++lo) {
            amps[hi * a.dimension() + lo] = b[hi] * a[lo];
        }
    }
    return StateVector(n, std::move(amps));
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    const std::size_t n = a.num_qubits() + b.num_qubits();
    const std::size_t da = a.dimension();
    DensityMatrix out(n);
    for (std::size_t rb = 0; rb < b.dimension(); ++rb) {
        for (std::size_t cb = 0; cb < b.dimension(); ++cb) {
            const Complex eb = b(rb, cb);
            for (std::size_t ra = 0; ra < da; ++ra) {
                for (std::size_t ca = 0; ca < da; ++ca) {
                    out(rb * da + ra, cb * da + ca) = eb * a(ra, ca);
                }
            }
        }
    }
    return out;
}

QuantumState tensor(const QuantumState &a, const QuantumState &b) {
    if (a.index() != b.index()) {
        throw std::invalid_argument("tensor of a state vector with a density matrix");
    }
    if (const auto *sa = std::get_if<StateVector>(&a)) {
        return tensor(*sa, std::get<StateVector>(b));
    }
    return tensor(std::get<DensityMatrix>(a), std::get<DensityMatrix>(b));
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<QubitIndex> &keep) {
    const std::size_t n = rho.num_qubits();
    check_keep(keep, n);
    std::vector<QubitIndex> traced;
    for (QubitIndex q = 0; q < n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            traced.push_back(q);
        }
    }
    DensityMatrix out(keep.size());
    out.mutable_entries()[0] = 0.0;
    const std::size_t dk = out.dimension();
    const std::size_t dt = std::size_t{1} << traced.size();
    for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t t_bits = scatter_bits(t, traced);
        for (std::size_t r = 0; r < dk; ++r) {
            const std::size_t row = scatter_bits(r, keep) | t_bits;
            for (std::size_t c = 0; c < dk; ++c) {
                out(r, c) += rho(row, scatter_bits(c, keep) | t_bits);
            }
        }
    }
    return out;
}

double expectation_z(const StateVector &psi, QubitIndex qubit) {
    if (qubit >= psi.num_qubits()) {
        throw std::out_of_range("readout qubit out of range");
    }
    return kernels::omp::probability_one(psi.amplitudes(), static_cast<unsigned>(qubit));
}

double expectation_z(const DensityMatrix &rho, QubitIndex qubit) {
    if (qubit >= rho.num_qubits()) {
        throw std::out_of_range("readout qubit out of range");
    }
    const std::size_t bit = std::size_t{1} << qubit;
    double total = 0.0;
    for (std::size_t i = 0; i < rho.dimension(); ++i) {
        if (i & bit) {
            total += rho(i, i).real();
        }
    }
    return total;
}

double expectation_z(const QuantumState &state, QubitIndex qubit) {
    return std::visit([&](const auto &s) { return expectation_z(s, qubit); }, state);
}

DensityMatrix apply_depolarizing(const DensityMatrix &rho, const DepolarizingChannel &channel) {
    if (channel.num_qubits != rho.num_qubits()) {
        throw std::invalid_argument("channel width does not match the state");
    }
    DensityMatrix out = rho;
    detail::depolarize_inplace(out, channel.lambda);
    return out;
}

DensityMatrix to_density(const StateVector &psi) {
    const std::size_t dim = psi.dimension();
    std::vector<Complex> entries(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            entries[r * dim + c] = psi[r] * std::conj(psi[c]);
        }
    }
    return DensityMatrix(psi.num_qubits(), std::move(entries));
}

DensityMatrix to_density(const QuantumState &state) {
    if (const auto *psi = std::get_if<StateVector>(&state)) {
        return to_density(*psi);
    }
    return std::get<DensityMatrix>(state);
}

}  // namespace costembed

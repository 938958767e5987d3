#pragma once
// Dense-matrix reference used by the tests. Every gate is built as a full
// 2^n x 2^n matrix from its textbook definition, independent of the
// simulator's bit-twiddling kernels.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "costembed/circuit.hpp"
#include "costembed/state.hpp"

namespace ref {

using costembed::Complex;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Eigen::Matrix2cd pauli(costembed::Pauli p) {
    const Complex i(0, 1);
    Eigen::Matrix2cd m;
    switch (p) {
        case costembed::Pauli::X: m << 0, 1, 1, 0; break;
        case costembed::Pauli::Y: m << 0, -i, i, 0; break;
        case costembed::Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

// exp(i theta P) by the matrix exponential.
inline Eigen::Matrix2cd rotation(costembed::Pauli p, double theta) {
    Eigen::Matrix2cd a = Complex(0, theta) * pauli(p);
    return a.exp();
}

// Applies `u` to `target` when every control bit is set; identity elsewhere.
inline Mat controlled(const Eigen::Matrix2cd &u, std::size_t target, const std::vector<std::size_t> &controls,
                      std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    Mat m = Mat::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        bool on = true;
        for (auto c : controls) on = on && ((col >> c) & 1);
        if (!on) {
            m(col, col) = 1;
            continue;
        }
        const std::size_t b = (col >> target) & 1;
        const std::size_t base = col & ~(std::size_t{1} << target);
        m(base, col) += u(0, b);
        m(base | (std::size_t{1} << target), col) += u(1, b);
    }
    return m;
}

inline Mat gate_matrix(const costembed::Gate &g, std::size_t n) {
    using costembed::GateKind;
    using costembed::Pauli;
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::RX: return controlled(rotation(Pauli::X, *g.angle), g.targets[0], {}, n);
        case GateKind::RZ: return controlled(rotation(Pauli::Z, *g.angle), g.targets[0], {}, n);
        case GateKind::PauliRotation: return controlled(rotation(g.pauli, *g.angle), g.targets[0], {}, n);
        case GateKind::H: return controlled(h, g.targets[0], {}, n);
        case GateKind::X: return controlled(pauli(Pauli::X), g.targets[0], {}, n);
        case GateKind::Z: return controlled(pauli(Pauli::Z), g.targets[0], {}, n);
        case GateKind::ControlledPauli: return controlled(pauli(g.pauli), g.targets[0], g.controls, n);
        case GateKind::CNOT: return controlled(pauli(Pauli::X), g.targets[0], g.controls, n);
        case GateKind::CZ: return controlled(pauli(Pauli::Z), g.targets[0], g.controls, n);
        case GateKind::CSWAP: {
            const std::size_t dim = std::size_t{1} << n;
            Mat m = Mat::Zero(dim, dim);
            const auto a = g.targets[0], b = g.targets[1], c = g.controls[0];
            for (std::size_t col = 0; col < dim; ++col) {
                std::size_t row = col;
                if ((col >> c) & 1) {
                    const std::size_t ba = (col >> a) & 1, bb = (col >> b) & 1;
                    row &= ~((std::size_t{1} << a) | (std::size_t{1} << b));
                    row |= (bb << a) | (ba << b);
                }
                m(row, col) = 1;
            }
            return m;
        }
    }
    throw std::logic_error("unknown gate");
}

inline Mat circuit_matrix(const costembed::BoundCircuit &c) {
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    Mat u = Mat::Identity(dim, dim);
    for (const auto &g : c.gates) u = gate_matrix(g, c.num_qubits) * u;
    return u;
}

// Applies the gates one at a time; cheaper than building the full unitary.
inline Vec run(const costembed::BoundCircuit &c, Vec psi) {
    for (const auto &g : c.gates) psi = gate_matrix(g, c.num_qubits) * psi;
    return psi;
}

// Product state from per-qubit (amp0, amp1) pairs, qubit 0 first.
inline Vec product(const std::vector<std::array<Complex, 2>> &qubits) {
    Vec v = Vec::Ones(1);
    for (const auto &q : qubits) {
        Vec next(v.size() * 2);
        next.head(v.size()) = q[0] * v;
        next.tail(v.size()) = q[1] * v;
        v = next;
    }
    return v;
}

inline costembed::StateVector to_state(const Vec &v) {
    std::vector<Complex> a(v.data(), v.data() + v.size());
    std::size_t n = 0;
    while ((std::size_t{1} << n) < a.size()) ++n;
    return costembed::StateVector(n, std::move(a));
}

inline Vec to_vec(const costembed::StateVector &psi) {
    Vec v(psi.dimension());
    for (std::size_t i = 0; i < psi.dimension(); ++i) v(i) = psi[i];
    return v;
}

inline Mat to_mat(const costembed::DensityMatrix &rho) {
    const auto d = rho.dimension();
    Mat m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = rho(r, c);
    return m;
}

inline double p1(const Mat &rho, std::size_t q) {
    double p = 0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        if ((static_cast<std::size_t>(i) >> q) & 1) p += rho(i, i).real();
    return p;
}

inline double p1(const Vec &psi, std::size_t q) {
    double p = 0;
    for (Eigen::Index i = 0; i < psi.size(); ++i)
        if ((static_cast<std::size_t>(i) >> q) & 1) p += std::norm(psi(i));
    return p;
}

inline costembed::StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n);
    double norm = 0;
    for (auto &x : a) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto &x : a) x /= std::sqrt(norm);
    return costembed::StateVector(n, std::move(a));
}

// Random density matrix of rank `rank`.
inline costembed::DensityMatrix random_density(std::size_t n, std::size_t rank, std::mt19937_64 &rng) {
    const std::size_t d = std::size_t{1} << n;
    std::vector<Complex> e(d * d);
    std::uniform_real_distribution<double> w(0.1, 1.0);
    std::vector<double> weights(rank);
    double total = 0;
    for (auto &x : weights) total += (x = w(rng));
    for (std::size_t k = 0; k < rank; ++k) {
        auto psi = random_state(n, rng);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) e[r * d + c] += weights[k] / total * psi[r] * std::conj(psi[c]);
    }
    return costembed::DensityMatrix(n, std::move(e));
}

inline costembed::ParameterVector random_params(std::size_t count, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * M_PI);
    costembed::ParameterVector p(count);
    for (auto &x : p) x = u(rng);
    return p;
}

}  // namespace ref

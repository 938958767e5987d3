#include "costembed/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace costembed {

namespace {

std::size_t checked_dimension(std::size_t num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("register of " + std::to_string(num_qubits) + " qubits exceeds limit of " +
                                    std::to_string(kMaxQubits));
    }
    return std::size_t{1} << num_qubits;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits)
    : num_qubits_(num_qubits), amplitudes_(checked_dimension(num_qubits)) {
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != checked_dimension(num_qubits)) {
        throw std::invalid_argument("state vector needs 2^n amplitudes");
    }
    if (std::abs(norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
    StateVector psi(num_qubits);
    if (index >= psi.dimension()) {
        throw std::out_of_range("basis index out of range");
    }
    psi.amplitudes_[0] = 0.0;
    psi.amplitudes_[index] = 1.0;
    return psi;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

DensityMatrix::DensityMatrix(std::size_t num_qubits)
    : num_qubits_(num_qubits), dim_(checked_dimension(num_qubits)), entries_(dim_ * dim_) {
    entries_[0] = 1.0;
}

DensityMatrix::DensityMatrix(std::size_t num_qubits, std::vector<Complex> entries)
    : num_qubits_(num_qubits), dim_(checked_dimension(num_qubits)), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("density matrix needs 4^n entries");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
    DensityMatrix rho(num_qubits);
    rho.entries_[0] = 0.0;
    const double p = 1.0 / static_cast<double>(rho.dim_);
    for (std::size_t i = 0; i < rho.dim_; ++i) {
        rho(i, i) = p;
    }
    return rho;
}

Complex DensityMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum_{r,c} rho(r,c) rho(c,r)
    Complex total = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            total += (*this)(r, c) * (*this)(c, r);
        }
    }
    return total.real();
}

std::size_t num_qubits(const QuantumState &state) {
    return std::visit([](const auto &s) { return s.num_qubits(); }, state);
}

PhysicalityReport check_physical(const DensityMatrix &rho) {
    PhysicalityReport report;
    const std::size_t dim = rho.dimension();
    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rho(r, c);
            report.hermiticity_error = std::max(report.hermiticity_error, std::abs(rho(r, c) - std::conj(rho(c, r))));
        }
    }
    report.trace_error = std::abs(rho.trace() - 1.0);
    Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    return report;
}

double max_abs_diff(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("density matrices differ in size");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("state vectors differ in size");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace costembed

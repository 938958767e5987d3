#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace costembed {

using Complex = std::complex<double>;

/// Position of a qubit inside a register. Qubit 0 is the least-significant
/// bit of the amplitude index.
using QubitIndex = std::size_t;

inline constexpr std::size_t kMaxQubits = 12;

/// Pure state over `num_qubits` qubits, 2^n amplitudes.
class StateVector {
  public:
    /// |0...0>
    explicit StateVector(std::size_t num_qubits);

    /// Takes ownership of `amplitudes`; size must be 2^n and the norm 1 within 1e-10.
    StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

    static StateVector basis(std::size_t num_qubits, std::size_t index);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> mutable_amplitudes() { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;

  private:
    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Row-major 2^n x 2^n matrix. Element (r, c) lives at r * 2^n + c.
///
/// Construction only checks the shape; physical validity (Hermitian, unit
/// trace, positive) is checked separately by `check_physical` so that the
/// linear algebra can also be replayed on unnormalized operators.
class DensityMatrix {
  public:
    /// |0...0><0...0|
    explicit DensityMatrix(std::size_t num_qubits);
    DensityMatrix(std::size_t num_qubits, std::vector<Complex> entries);

    static DensityMatrix maximally_mixed(std::size_t num_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return dim_; }

    const Complex &operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> mutable_entries() { return entries_; }

    Complex trace() const;
    /// Tr(rho^2), real part.
    double purity() const;

  private:
    std::size_t num_qubits_;
    std::size_t dim_;
    std::vector<Complex> entries_;
};

using QuantumState = std::variant<StateVector, DensityMatrix>;

std::size_t num_qubits(const QuantumState &state);

struct PhysicalityReport {
    double hermiticity_error = 0.0;  // max |rho - rho^dagger|
    double trace_error = 0.0;        // |Tr(rho) - 1|
    double min_eigenvalue = 0.0;

    bool ok(double tol = 1e-10) const {
        return hermiticity_error <= tol && trace_error <= tol && min_eigenvalue >= -tol;
    }
};

PhysicalityReport check_physical(const DensityMatrix &rho);

/// Max entrywise modulus of the difference. Shapes must agree.
double max_abs_diff(const DensityMatrix &a, const DensityMatrix &b);
double max_abs_diff(const StateVector &a, const StateVector &b);

}  // namespace costembed

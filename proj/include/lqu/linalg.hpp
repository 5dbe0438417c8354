#pragma once

// Small dense complex linear algebra. Dimensions here never exceed a few
// hundred, so everything is row-major std::vector storage and O(n^3) kernels.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lqu {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-major nested initializer; all rows must have the same length as the outer list.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * dim_ + c]; }

  ComplexMatrix adjoint() const;
  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;
  /// Largest entrywise |m - m^dagger|.
  double hermiticity_defect() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// 1 -> x, 2 -> y, 3 -> z. Throws IndexOutOfRange otherwise.
ComplexMatrix by_index(int index);
}  // namespace pauli

/// Eigenvalues ascending; eigenvectors stored as the columns of `vectors`.
struct HermitianEigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;

  ComplexMatrix reconstruct() const;
};

inline constexpr double kDefaultHermitianTol = 1e-10;
inline constexpr double kDefaultNegTol = 1e-8;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalTol = 1e-12;

/// Cyclic complex Jacobi. Throws NotHermitian if max|m - m^dagger| > tol,
/// NoConvergence if the off-diagonal Frobenius norm does not fall below
/// 1e-12 * ||m||_F within 100 sweeps.
HermitianEigenSystem hermitian_eig(const ComplexMatrix& m, double tol = kDefaultHermitianTol);

/// Principal square root V sqrt(max(lambda, 0)) V^dagger of a PSD matrix.
/// Eigenvalues in [-neg_tol, 0) are treated as zero, as are positive
/// eigenvalues at the rounding level of the decomposition (below
/// dim * 4 * eps * max|lambda|). Throws NotPositiveSemidefinite below -neg_tol.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m, double neg_tol = kDefaultNegTol);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(a b c d). Throws DimensionMismatch unless all four share one dimension.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                      const ComplexMatrix& d);

/// Tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace lqu

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "pathent/errors.hpp"

namespace pathent {

using Complex = std::complex<double>;

/// Default relative tolerance used by every validation and convergence check.
inline constexpr double kDefaultTol = 1e-10;

/// Dense row-major complex matrix. All operations return fresh values; there
/// are no in-place or sparse paths (every matrix in this project is <= 36x36).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  // Checks size and finiteness (NaN/Inf entries are rejected).
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  Complex trace() const;          // requires square
  double frobenius_norm() const;
  bool all_finite() const;

  /// ||A - A^dagger||_F <= tol * ||A||_F (empty and 1x1 matrices are Hermitian
  /// iff real on the diagonal).
  bool is_hermitian(double tol = kDefaultTol) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);  // same as matmul
Matrix operator*(Complex scale, const Matrix& a);

/// Standard matrix product; throws on inner-dimension mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

/// Kronecker product: (a (x) b)[(i*p + k), (j*q + l)] = a[i,j] * b[k,l]
/// for b of shape p x q.
Matrix kron(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
Matrix dagger(const Matrix& a);

/// (A + A^dagger) / 2.
Matrix hermitian_part(const Matrix& a);

/// Largest entrywise |a - b|; throws on shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

struct HermitianEigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // columns, orthonormal
};

/// Full spectrum of a Hermitian matrix by classical Jacobi rotations: each
/// rotation annihilates the largest remaining off-diagonal entry; terminates
/// when the off-diagonal Frobenius mass drops below tol * ||A||_F, erroring
/// after 100 sweeps. Input must be Hermitian within tol; it is symmetrized
/// to (A + A^dagger)/2 before iterating so roundoff never leaks into the
/// spectrum.
HermitianEigenDecomposition hermitian_eigensolve(const Matrix& a,
                                                 double tol = kDefaultTol);

/// True iff the minimum eigenvalue is >= -tol * ||A||_F.
bool is_psd(const Matrix& a, double tol = kDefaultTol);

/// Reorders the tensor factors of a square matrix on a product space.
/// dims lists the factor dimensions in the current order; perm[i] names the
/// current factor that moves to position i. Used to switch a Choi matrix from
/// its natural A,B,A',B' layout to the A,A',B,B' cut.
Matrix permute_systems(const Matrix& m, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& perm);

}  // namespace pathent

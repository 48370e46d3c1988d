#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "qudit/errors.hpp"

namespace qudit {

using Complex = std::complex<double>;

/// Tolerance used wherever a `tol` argument has a default.
inline constexpr double kDefaultTol = 1e-9;

/// Dense row-major complex matrix.
///
/// A Matrix is a value: it has no mutating members, and every operation
/// returns a new matrix. Entries are checked to be finite on construction.
class Matrix {
 public:
  /// Empty 0x0 matrix, only useful as a placeholder.
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);
  static Matrix diagonal(std::initializer_list<double> values);
  /// Standard matrix |row><col| of size n x n (0-based indices).
  static Matrix unit(std::size_t n, std::size_t row, std::size_t col);
  /// |ket><bra|
  static Matrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  /// Builds a matrix from f(i, j).
  template <class F>
    requires std::is_invocable_r_v<Complex, F, std::size_t, std::size_t>
  static Matrix generate(std::size_t rows, std::size_t cols, F&& f) {
    std::vector<Complex> entries(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) entries[i * cols + j] = f(i, j);
    return Matrix(rows, cols, std::move(entries));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const Complex> entries() const noexcept { return entries_; }

  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conjugate() const;
  Complex trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Complex s, const Matrix& a);
  friend Matrix operator*(const Matrix& a, Complex s) { return s * a; }
  friend Matrix operator/(const Matrix& a, Complex s) { return (1.0 / s) * a; }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);

/// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex hs_inner(const Matrix& a, const Matrix& b);

/// Tr((a (x) b)^dagger rho) without materialising the Kronecker product.
Complex hs_inner_kron(const Matrix& a, const Matrix& b, const Matrix& rho);

/// sqrt(Re Tr(a^dagger a)).
double hs_norm(const Matrix& a);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Largest entrywise modulus of a - a^dagger.
double hermiticity_defect(const Matrix& a);
bool is_hermitian(const Matrix& a, double tol = kDefaultTol);

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Cyclic complex Jacobi: sweeps over all (p, q) pairs, annihilating a_pq with
/// a phase-adjusted plane rotation, until the off-diagonal Frobenius mass is at
/// most `tol`. Throws ValidationError when `a` is not Hermitian within `tol`
/// and NumericError if the sweep limit is exhausted.
std::vector<double> hermitian_eigenvalues(const Matrix& a, double tol = kDefaultTol);

/// min eigenvalue >= -tol. Throws ValidationError for non-Hermitian input.
bool is_positive_semidefinite(const Matrix& a, double tol = kDefaultTol);

/// Transposes the second tensor factor of a (dim_a*dim_b)-square matrix.
Matrix partial_transpose(const Matrix& a, std::size_t dim_a, std::size_t dim_b);

/// <v|a|v>
Complex expectation(const Matrix& a, std::span<const Complex> v);

}  // namespace qudit

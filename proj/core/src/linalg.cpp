#include "qudit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace qudit {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a.rows() << "x" << a.cols() << " vs "
        << b.rows() << "x" << b.cols() << ")";
    throw DimensionError(msg.str());
  }
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square() || a.empty()) {
    std::ostringstream msg;
    msg << what << ": expected a non-empty square matrix, got " << a.rows() << "x"
        << a.cols();
    throw DimensionError(msg.str());
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw DimensionError("Matrix: entry count does not match rows x cols");
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvalidArgument("Matrix: non-finite entry");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("Matrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  *this = Matrix(rows_, cols_, std::move(entries_));
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, std::vector<Complex>(rows * cols));
}

Matrix Matrix::identity(std::size_t n) {
  return generate(n, n, [](std::size_t i, std::size_t j) { return Complex(i == j ? 1.0 : 0.0); });
}

Matrix Matrix::diagonal(std::span<const double> values) {
  const std::size_t n = values.size();
  return generate(n, n, [&](std::size_t i, std::size_t j) {
    return i == j ? Complex(values[i]) : Complex(0.0);
  });
}

Matrix Matrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

Matrix Matrix::unit(std::size_t n, std::size_t row, std::size_t col) {
  if (row >= n || col >= n) throw InvalidArgument("Matrix::unit: index out of range");
  std::vector<Complex> entries(n * n);
  entries[row * n + col] = 1.0;
  return Matrix(n, n, std::move(entries));
}

Matrix Matrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  return generate(ket.size(), bra.size(),
                  [&](std::size_t i, std::size_t j) { return ket[i] * std::conj(bra[j]); });
}

Matrix Matrix::adjoint() const {
  return generate(cols_, rows_,
                  [this](std::size_t i, std::size_t j) { return std::conj((*this)(j, i)); });
}

Matrix Matrix::transpose() const {
  return generate(cols_, rows_, [this](std::size_t i, std::size_t j) { return (*this)(j, i); });
}

Matrix Matrix::conjugate() const {
  std::vector<Complex> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(),
                 [](Complex z) { return std::conj(z); });
  return Matrix(rows_, cols_, std::move(out));
}

Complex Matrix::trace() const {
  require_square(*this, "trace");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator+");
  std::vector<Complex> out(a.entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries_[i] + b.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(out));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator-");
  std::vector<Complex> out(a.entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries_[i] - b.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(out));
}

Matrix operator-(const Matrix& a) { return Complex(-1.0) * a; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("operator*: inner dimensions differ");
  std::vector<Complex> out(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a.entries_[i * a.cols_ + k];
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out[i * b.cols_ + j] += aik * b.entries_[k * b.cols_ + j];
    }
  }
  return Matrix(a.rows_, b.cols_, std::move(out));
}

Matrix operator*(Complex s, const Matrix& a) {
  std::vector<Complex> out(a.entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(out));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  return Matrix::generate(rows, cols, [&](std::size_t i, std::size_t j) {
    return a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  });
}

std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const Complex x : a)
    for (const Complex y : b) out.push_back(x * y);
  return out;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  require_square(a, "hs_inner");
  require_same_shape(a, b, "hs_inner");
  Complex sum = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) sum += std::conj(ea[i]) * eb[i];
  return sum;
}

Complex hs_inner_kron(const Matrix& a, const Matrix& b, const Matrix& rho) {
  require_square(a, "hs_inner_kron");
  require_square(b, "hs_inner_kron");
  const std::size_t da = a.rows();
  const std::size_t db = b.rows();
  if (rho.rows() != da * db || rho.cols() != da * db)
    throw DimensionError("hs_inner_kron: rho must be (da*db) x (da*db)");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = std::conj(a(i, j));
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) {
          const Complex bkl = b(k, l);
          if (bkl == Complex(0.0)) continue;
          sum += aij * std::conj(bkl) * rho(i * db + k, j * db + l);
        }
      }
    }
  }
  return sum;
}

double hs_norm(const Matrix& a) {
  require_square(a, "hs_norm");
  double sum = 0.0;
  for (const Complex z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

double hermiticity_defect(const Matrix& a) {
  require_square(a, "hermiticity_defect");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

bool is_hermitian(const Matrix& a, double tol) { return hermiticity_defect(a) <= tol; }

std::vector<double> hermitian_eigenvalues(const Matrix& a, double tol) {
  require_square(a, "hermitian_eigenvalues");
  if (const double defect = hermiticity_defect(a); defect > tol) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: matrix is not Hermitian (max |a - a^dagger| = " << defect
        << " > tol " << tol << ")";
    throw ValidationError(msg.str());
  }

  const std::size_t n = a.rows();
  std::vector<Complex> w(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return w[i * n + j]; };
  // Symmetrise so round-off in the input cannot bias the rotations.
  for (std::size_t i = 0; i < n; ++i) {
    at(i, i) = at(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (at(i, j) + std::conj(at(j, i)));
      at(i, j) = avg;
      at(j, i) = std::conj(avg);
    }
  }

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(at(i, j));
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_mass() > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = at(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Complex phase = apq / r;  // e^{i phi}
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * r, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // G = diag(1, e^{-i phi}) on (p, q) followed by the real rotation
        // [[c, s], [-s, c]]; A <- G^dagger A G.
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = at(k, p);
          const Complex akq = at(k, q);
          at(k, p) = akp * c + akq * gqp;
          at(k, q) = akp * s + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = at(p, k);
          const Complex aqk = at(q, k);
          at(p, k) = c * apk + std::conj(gqp) * aqk;
          at(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        at(p, p) = at(p, p).real();
        at(q, q) = at(q, q).real();
      }
    }
  }
  if (off_mass() > tol)
    throw NumericError("hermitian_eigenvalues: Jacobi sweeps did not converge");

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = at(i, i).real();
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

bool is_positive_semidefinite(const Matrix& a, double tol) {
  return hermitian_eigenvalues(a, tol).front() >= -tol;
}

Matrix partial_transpose(const Matrix& a, std::size_t dim_a, std::size_t dim_b) {
  if (a.rows() != dim_a * dim_b || a.cols() != dim_a * dim_b)
    throw DimensionError("partial_transpose: matrix is not (dim_a*dim_b)-square");
  return Matrix::generate(a.rows(), a.cols(), [&](std::size_t row, std::size_t col) {
    const std::size_t i = row / dim_b, k = row % dim_b;
    const std::size_t j = col / dim_b, l = col % dim_b;
    return a(i * dim_b + l, j * dim_b + k);
  });
}

Complex expectation(const Matrix& a, std::span<const Complex> v) {
  if (a.rows() != v.size() || a.cols() != v.size())
    throw DimensionError("expectation: vector length does not match matrix");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) row += a(i, j) * v[j];
    sum += std::conj(v[i]) * row;
  }
  return sum;
}

}  // namespace qudit

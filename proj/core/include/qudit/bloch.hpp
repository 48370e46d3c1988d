#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qudit/bases.hpp"
#include "qudit/linalg.hpp"

namespace qudit {

/// Outcome of checking a matrix against the density-matrix invariants.
struct StateCheck {
  double hermiticity_defect = 0.0;
  Complex trace = 0.0;
  /// Only meaningful when the matrix is Hermitian.
  double min_eigenvalue = 0.0;
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;

  bool ok() const noexcept { return hermitian && unit_trace && positive; }
  /// One human-readable line per violated invariant.
  std::vector<std::string> failures() const;
};

StateCheck check_state(const Matrix& m, double tol = kDefaultTol);

/// A Matrix that is Hermitian, unit-trace and positive semidefinite within tol.
class DensityMatrix {
 public:
  /// Throws DimensionError for non-square input and ValidationError naming
  /// every failed invariant otherwise.
  explicit DensityMatrix(Matrix m, double tol = kDefaultTol);

  const Matrix& matrix() const noexcept { return matrix_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  double tol() const noexcept { return tol_; }

 private:
  Matrix matrix_;
  double tol_;
};

/// Coefficients b of rho = (1/d) 1 + sum_i b_i A_i over the traceless elements
/// of one basis, in basis order. b_i = Tr(A_i^dagger rho) / N.
struct BlochVector {
  BasisFamily family = BasisFamily::GGM;
  int dim = 0;
  std::vector<Complex> components;
};

BlochVector decompose(const DensityMatrix& rho, BasisFamily family);
BlochVector decompose(const DensityMatrix& rho, const OperatorBasis& basis);

/// (1/d) 1 + b.A, which need not be positive.
struct ReconstructedState {
  Matrix matrix;
  double min_eigenvalue = 0.0;
  bool positive = false;

  /// Throws ValidationError when the reconstruction is not a state.
  DensityMatrix to_density(double tol = kDefaultTol) const;
};

/// Throws DimensionError if the component count is not d^2 - 1 and
/// ValidationError if the result is not Hermitian within tol.
ReconstructedState reconstruct(const BlochVector& b, double tol = kDefaultTol);

/// Euclidean length of the components (complex modulus).
double radius(const BlochVector& b);
/// sqrt((d-1)/(2d)) for GGM, sqrt((d-1)/d) for POB, sqrt(d-1)/d for WOB.
double radius_bound(BasisFamily family, int d);

/// Coefficients of a standard matrix |j><k| over one basis.
///
/// `identity` multiplies the bare identity matrix (used by the GGM expansion,
/// whose basis has no identity element). POB and WOB keep T_00 / U_00 among
/// `terms` and leave `identity` at zero.
struct StandardExpansion {
  BasisFamily family = BasisFamily::GGM;
  int dim = 0;
  Complex identity = 0.0;
  std::vector<std::pair<BasisElementLabel, Complex>> terms;

  /// Coefficient of `label`, zero when absent.
  Complex coefficient(const BasisElementLabel& label) const;
  /// identity * 1 + sum of coefficient * element.
  Matrix assemble() const;
};

/// |j><k| over the GGB (1-based j, k).
StandardExpansion expand_standard_ggb(int d, int j, int k);
/// |i><j| over the POB (1-based i, j); only M = m_i - m_j contributes.
StandardExpansion expand_standard_pob(int d, int i, int j);
/// |j><k| over the WOB (0-based j, k).
StandardExpansion expand_standard_wob(int d, int j, int k);

/// rho = e 1(x)1 + n_i G_i(x)1 + m_i 1(x)G_i + c_ij G_i(x)G_j for a d^2 x d^2 rho,
/// with G_i the traceless elements of one basis.
struct BipartiteBlochDecomposition {
  int dim = 0;
  BasisFamily family = BasisFamily::GGM;
  Complex identity = 0.0;
  std::vector<Complex> n_coeffs;
  std::vector<Complex> m_coeffs;
  /// Row-major (d^2-1) x (d^2-1).
  std::vector<Complex> c_matrix;

  std::size_t size() const noexcept { return n_coeffs.size(); }
  Complex c(std::size_t i, std::size_t j) const { return c_matrix.at(i * size() + j); }
  Matrix reconstruct() const;
};

/// Throws DimensionError unless rho is d^2 x d^2 for an integer d >= 2.
BipartiteBlochDecomposition decompose_bipartite(const DensityMatrix& rho, BasisFamily family);

/// Tr rho^2.
double purity(const DensityMatrix& rho);
/// 1/d + N |b|^2, the same quantity read off a Bloch vector.
double purity_from_bloch(const BlochVector& b);

/// The integer d with d*d == n, or 0 when n is not a perfect square.
int exact_sqrt(std::size_t n);

}  // namespace qudit

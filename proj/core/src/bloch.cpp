#include "qudit/bloch.hpp"

#include <cmath>
#include <sstream>

#include "qudit/angular.hpp"
#include "qudit/errors.hpp"

namespace qudit {

namespace {

// Accumulates coefficient * matrix into a dense buffer.
class MatrixAccumulator {
 public:
  explicit MatrixAccumulator(std::size_t n) : n_(n), entries_(n * n) {}

  void add(Complex coefficient, const Matrix& m) {
    if (coefficient == Complex(0.0)) return;
    const auto src = m.entries();
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += coefficient * src[i];
  }
  void add_identity(Complex coefficient) {
    for (std::size_t i = 0; i < n_; ++i) entries_[i * n_ + i] += coefficient;
  }
  Matrix build() && { return Matrix(n_, n_, std::move(entries_)); }

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
};

void require_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    std::ostringstream msg;
    msg << what << ": index " << value << " outside [" << lo << ", " << hi << "]";
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

std::vector<std::string> StateCheck::failures() const {
  std::vector<std::string> out;
  if (!hermitian) {
    std::ostringstream msg;
    msg << "not Hermitian: max |rho - rho^dagger| = " << hermiticity_defect;
    out.push_back(msg.str());
  }
  if (!unit_trace) {
    std::ostringstream msg;
    msg << "trace != 1: Tr rho = " << trace.real() << (trace.imag() < 0 ? " - " : " + ")
        << std::abs(trace.imag()) << "i";
    out.push_back(msg.str());
  }
  if (hermitian && !positive) {
    std::ostringstream msg;
    msg << "not positive semidefinite: min eigenvalue = " << min_eigenvalue;
    out.push_back(msg.str());
  }
  return out;
}

StateCheck check_state(const Matrix& m, double tol) {
  if (!m.is_square() || m.empty())
    throw DimensionError("density matrix must be a non-empty square matrix");
  StateCheck check;
  check.hermiticity_defect = hermiticity_defect(m);
  check.hermitian = check.hermiticity_defect <= tol;
  check.trace = m.trace();
  check.unit_trace = std::abs(check.trace - Complex(1.0)) <= tol;
  if (check.hermitian) {
    check.min_eigenvalue = hermitian_eigenvalues(m, tol).front();
    check.positive = check.min_eigenvalue >= -tol;
  }
  return check;
}

DensityMatrix::DensityMatrix(Matrix m, double tol) : matrix_(std::move(m)), tol_(tol) {
  const StateCheck check = check_state(matrix_, tol_);
  if (!check.ok()) {
    std::string message = "invalid density matrix:";
    for (const auto& failure : check.failures()) message += " " + failure + ";";
    message.pop_back();
    throw ValidationError(message);
  }
}

BlochVector decompose(const DensityMatrix& rho, BasisFamily family) {
  return decompose(rho, *shared_basis(family, rho.dim()));
}

BlochVector decompose(const DensityMatrix& rho, const OperatorBasis& basis) {
  if (basis.dim() != rho.dim())
    throw DimensionError("decompose: basis dimension differs from the state's");
  BlochVector b{basis.family(), basis.dim(), {}};
  const double norm = basis.norm_constant();
  for (const auto& element : basis.traceless_elements())
    b.components.push_back(hs_inner(element.matrix, rho.matrix()) / norm);
  return b;
}

DensityMatrix ReconstructedState::to_density(double tol) const {
  return DensityMatrix(matrix, tol);
}

ReconstructedState reconstruct(const BlochVector& b, double tol) {
  const std::size_t d = static_cast<std::size_t>(b.dim);
  if (b.dim < 2 || b.components.size() != d * d - 1) {
    std::ostringstream msg;
    msg << "reconstruct: expected " << (b.dim >= 2 ? d * d - 1 : 0) << " components for d = "
        << b.dim << ", got " << b.components.size();
    throw DimensionError(msg.str());
  }
  const auto basis = shared_basis(b.family, b.dim);
  const auto elements = basis->traceless_elements();
  MatrixAccumulator acc(d);
  acc.add_identity(1.0 / b.dim);
  for (std::size_t i = 0; i < elements.size(); ++i) acc.add(b.components[i], elements[i].matrix);
  ReconstructedState out{std::move(acc).build(), 0.0, false};

  if (const double defect = hermiticity_defect(out.matrix); defect > tol) {
    std::ostringstream msg;
    msg << "reconstruct: Bloch vector does not describe a Hermitian operator (defect " << defect
        << ")";
    throw ValidationError(msg.str());
  }
  out.min_eigenvalue = hermitian_eigenvalues(out.matrix, tol).front();
  out.positive = out.min_eigenvalue >= -tol;
  return out;
}

double radius(const BlochVector& b) {
  double sum = 0.0;
  for (const Complex z : b.components) sum += std::norm(z);
  return std::sqrt(sum);
}

double radius_bound(BasisFamily family, int d) {
  if (d < 2) throw InvalidArgument("radius_bound: dimension must be >= 2");
  switch (family) {
    case BasisFamily::GGM: return std::sqrt((d - 1.0) / (2.0 * d));
    case BasisFamily::POB: return std::sqrt((d - 1.0) / d);
    case BasisFamily::WOB: return std::sqrt(d - 1.0) / d;
  }
  return 0.0;
}

Complex StandardExpansion::coefficient(const BasisElementLabel& label) const {
  for (const auto& [l, c] : terms)
    if (l == label) return c;
  return 0.0;
}

Matrix StandardExpansion::assemble() const {
  MatrixAccumulator acc(static_cast<std::size_t>(dim));
  acc.add_identity(identity);
  for (const auto& [label, c] : terms) acc.add(c, element_matrix(dim, label));
  return std::move(acc).build();
}

StandardExpansion expand_standard_ggb(int d, int j, int k) {
  if (d < 2) throw InvalidArgument("expand_standard_ggb: dimension must be >= 2");
  require_range(j, 1, d, "expand_standard_ggb");
  require_range(k, 1, d, "expand_standard_ggb");
  StandardExpansion out{BasisFamily::GGM, d, 0.0, {}};
  const Complex i(0.0, 1.0);
  if (j < k) {
    out.terms.emplace_back(GgmLabel::symmetric(j, k), 0.5);
    out.terms.emplace_back(GgmLabel::antisymmetric(j, k), 0.5 * i);
  } else if (j > k) {
    out.terms.emplace_back(GgmLabel::symmetric(k, j), 0.5);
    out.terms.emplace_back(GgmLabel::antisymmetric(k, j), -0.5 * i);
  } else {
    // Lambda^0 vanishes, so the first term only exists for j > 1.
    if (j > 1) out.terms.emplace_back(GgmLabel::diagonal(j - 1), -std::sqrt((j - 1.0) / (2.0 * j)));
    for (int n = 0; n <= d - j - 1; ++n) {
      const double jn = j + n;
      out.terms.emplace_back(GgmLabel::diagonal(j + n), 1.0 / std::sqrt(2.0 * jn * (jn + 1.0)));
    }
    out.identity = 1.0 / d;
  }
  return out;
}

StandardExpansion expand_standard_pob(int d, int i, int j) {
  if (d < 2) throw InvalidArgument("expand_standard_pob: dimension must be >= 2");
  require_range(i, 1, d, "expand_standard_pob");
  require_range(j, 1, d, "expand_standard_pob");
  const auto s = HalfInteger::spin_of_dimension(d);
  const auto m_i = HalfInteger::from_twice(d + 1 - 2 * i);
  const auto m_j = HalfInteger::from_twice(d + 1 - 2 * j);
  const HalfInteger projection = m_i - m_j;  // m_j + M = m_i
  const int M = projection.twice() / 2;
  StandardExpansion out{BasisFamily::POB, d, 0.0, {}};
  for (int L = std::abs(M); L <= d - 1; ++L) {
    const double cg = clebsch_gordan({s, m_j, HalfInteger::from_int(L), projection, s, m_i});
    out.terms.emplace_back(PobLabel{L, M}, std::sqrt((2.0 * L + 1.0) / d) * cg);
  }
  return out;
}

StandardExpansion expand_standard_wob(int d, int j, int k) {
  if (d < 2) throw InvalidArgument("expand_standard_wob: dimension must be >= 2");
  require_range(j, 0, d - 1, "expand_standard_wob");
  require_range(k, 0, d - 1, "expand_standard_wob");
  StandardExpansion out{BasisFamily::WOB, d, 0.0, {}};
  const int shift = ((k - j) % d + d) % d;
  for (int l = 0; l < d; ++l)
    out.terms.emplace_back(WobLabel{l, shift},
                           root_of_unity(d, -static_cast<long long>(l) * j) / static_cast<double>(d));
  return out;
}

Matrix BipartiteBlochDecomposition::reconstruct() const {
  const auto basis = shared_basis(family, dim);
  const auto elements = basis->traceless_elements();
  const std::size_t d = static_cast<std::size_t>(dim);
  const Matrix id = Matrix::identity(d);
  MatrixAccumulator acc(d * d);
  acc.add_identity(identity);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    acc.add(n_coeffs[i], kron(elements[i].matrix, id));
    acc.add(m_coeffs[i], kron(id, elements[i].matrix));
    for (std::size_t j = 0; j < elements.size(); ++j)
      acc.add(c(i, j), kron(elements[i].matrix, elements[j].matrix));
  }
  return std::move(acc).build();
}

BipartiteBlochDecomposition decompose_bipartite(const DensityMatrix& rho, BasisFamily family) {
  const int d = exact_sqrt(static_cast<std::size_t>(rho.dim()));
  if (d < 2) {
    throw DimensionError("decompose_bipartite: dimension " + std::to_string(rho.dim()) +
                         " is not d^2 for an integer d >= 2");
  }
  const auto basis = shared_basis(family, d);
  const auto elements = basis->traceless_elements();
  const double norm = basis->norm_constant();
  const Matrix id = Matrix::identity(static_cast<std::size_t>(d));
  const Matrix& m = rho.matrix();

  BipartiteBlochDecomposition out;
  out.dim = d;
  out.family = family;
  out.identity = m.trace() / static_cast<double>(d * d);
  const std::size_t count = elements.size();
  out.n_coeffs.resize(count);
  out.m_coeffs.resize(count);
  out.c_matrix.resize(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    out.n_coeffs[i] = hs_inner_kron(elements[i].matrix, id, m) / (norm * d);
    out.m_coeffs[i] = hs_inner_kron(id, elements[i].matrix, m) / (norm * d);
    for (std::size_t j = 0; j < count; ++j)
      out.c_matrix[i * count + j] =
          hs_inner_kron(elements[i].matrix, elements[j].matrix, m) / (norm * norm);
  }
  return out;
}

double purity(const DensityMatrix& rho) { return hs_inner(rho.matrix(), rho.matrix()).real(); }

double purity_from_bloch(const BlochVector& b) {
  const double r = radius(b);
  return 1.0 / b.dim + norm_constant(b.family, b.dim) * r * r;
}

int exact_sqrt(std::size_t n) {
  const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  return root * root == n ? static_cast<int>(root) : 0;
}

}  // namespace qudit

#include "qudit/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qudit/bases.hpp"
#include "qudit/errors.hpp"

namespace qudit {

namespace {

void require_dimension(int d, const char* what) {
  if (d < 2) throw InvalidArgument(std::string(what) + ": dimension must be >= 2, got " +
                                   std::to_string(d));
}

std::vector<Complex> normalized(std::vector<Complex> v) {
  double norm2 = 0.0;
  for (const Complex z : v) norm2 += std::norm(z);
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& z : v) z *= scale;
  return v;
}

Matrix projector(std::span<const Complex> v) { return Matrix::outer(v, v); }

}  // namespace

double isotropic_alpha_min(int d) {
  require_dimension(d, "isotropic_alpha_min");
  return -1.0 / (static_cast<double>(d) * d - 1.0);
}

DensityMatrix bell_state(int d) {
  require_dimension(d, "bell_state");
  const auto n = static_cast<std::size_t>(d);
  std::vector<Complex> phi(n * n);
  for (std::size_t j = 0; j < n; ++j) phi[j * n + j] = 1.0 / std::sqrt(static_cast<double>(d));
  return DensityMatrix(projector(phi));
}

DensityMatrix isotropic(const IsotropicParams& p) {
  require_dimension(p.dim, "isotropic");
  const double lo = isotropic_alpha_min(p.dim);
  // Slack of a few ulps so that the exact boundary values are accepted.
  constexpr double slack = 1e-14;
  if (!(p.alpha >= lo - slack && p.alpha <= 1.0 + slack)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "isotropic: alpha = " << p.alpha << " outside the admissible interval [" << lo
        << ", 1] for d = " << p.dim;
    throw InvalidArgument(msg.str());
  }
  const auto n = static_cast<std::size_t>(p.dim * p.dim);
  const Matrix mixed = Matrix::identity(n) / static_cast<double>(n);
  return DensityMatrix(p.alpha * bell_state(p.dim).matrix() + (1.0 - p.alpha) * mixed);
}

Matrix lambda_operator(int d) {
  require_dimension(d, "lambda_operator");
  const auto basis = shared_basis(BasisFamily::GGM, d);
  Matrix out = Matrix::zeros(static_cast<std::size_t>(d * d), static_cast<std::size_t>(d * d));
  for (const auto& element : basis->elements()) {
    const auto& label = std::get<GgmLabel>(element.label);
    const double sign = label.kind == GgmLabel::Kind::Antisymmetric ? -1.0 : 1.0;
    out = out + sign * kron(element.matrix, element.matrix);
  }
  return out;
}

Matrix t_operator(int d) {
  require_dimension(d, "t_operator");
  const auto basis = shared_basis(BasisFamily::POB, d);
  Matrix out = Matrix::zeros(static_cast<std::size_t>(d * d), static_cast<std::size_t>(d * d));
  for (const auto& element : basis->traceless_elements())
    out = out + kron(element.matrix, element.matrix);
  return out;
}

Matrix u_operator(int d) {
  require_dimension(d, "u_operator");
  Matrix out = Matrix::zeros(static_cast<std::size_t>(d * d), static_cast<std::size_t>(d * d));
  for (int l = 0; l < d; ++l) {
    for (int m = 0; m < d; ++m) {
      if (l == 0 && m == 0) continue;
      out = out + kron(wob_element(d, l, m), wob_element(d, (d - l) % d, m));
    }
  }
  return out;
}

double GaussianStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Complex GaussianStream::next() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double phase = 2.0 * std::numbers::pi * u2;
  return Complex(r * std::cos(phase), r * std::sin(phase)) / std::numbers::sqrt2;
}

std::vector<Complex> GaussianStream::vector(std::size_t n) {
  std::vector<Complex> out(n);
  for (Complex& z : out) z = next();
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Complex> random_state_vector(int d, std::uint64_t seed) {
  require_dimension(d, "random_state_vector");
  GaussianStream stream(seed);
  return normalized(stream.vector(static_cast<std::size_t>(d)));
}

DensityMatrix random_pure_state(int d, std::uint64_t seed) {
  return DensityMatrix(projector(random_state_vector(d, seed)));
}

std::vector<Complex> random_product_vector(int d, std::uint64_t seed) {
  require_dimension(d, "random_product_vector");
  GaussianStream stream(seed);
  const auto a = normalized(stream.vector(static_cast<std::size_t>(d)));
  const auto b = normalized(stream.vector(static_cast<std::size_t>(d)));
  return kron(a, b);
}

DensityMatrix random_pure_product_state(int d, std::uint64_t seed) {
  return DensityMatrix(projector(random_product_vector(d, seed)));
}

DensityMatrix random_density_matrix(int d, std::uint64_t seed) {
  require_dimension(d, "random_density_matrix");
  GaussianStream stream(seed);
  const auto n = static_cast<std::size_t>(d);
  const Matrix g(n, n, stream.vector(n * n));
  const Matrix ggd = g * g.adjoint();
  return DensityMatrix(ggd / ggd.trace().real());
}

}  // namespace qudit

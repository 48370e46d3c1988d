#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "qudit/bloch.hpp"
#include "qudit/errors.hpp"
#include "qudit/linalg.hpp"
#include "qudit/states.hpp"

using namespace qudit;
using Catch::Matchers::WithinAbs;

TEST_CASE("matrix construction validates shape and finiteness") {
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<Complex>(3)), DimensionError);
  CHECK_THROWS_AS(Matrix(1, 1, {Complex(std::nan(""), 0)}), InvalidArgument);
  CHECK_THROWS_AS(Matrix(1, 1, {Complex(0, INFINITY)}), InvalidArgument);
  CHECK_THROWS(Matrix{{1, 2}, {3}});
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(m.rows() == 2);
  CHECK(m(1, 0) == Complex(3));
}

TEST_CASE("kron of identities and diagonals") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
  const Matrix z = Matrix::diagonal({1, -1});
  CHECK(kron(z, z) == Matrix::diagonal({1, -1, -1, 1}));
  const Matrix a{{1, 2, 3}};
  const Matrix b{{1}, {Complex(0, 1)}};
  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 3);
  CHECK(k(1, 2) == Complex(0, 3));
}

TEST_CASE("kron of sigma_x pair acting on the qubit Bell vector") {
  // sigma_x (x) sigma_x swaps |00> <-> |11> and leaves the Bell vector fixed.
  const Matrix xx = kron(oracle::sigma(1), oracle::sigma(1));
  const std::vector<Complex> phi{M_SQRT1_2, 0, 0, M_SQRT1_2};
  CHECK_THAT(expectation(xx, phi).real(), WithinAbs(1.0, 1e-15));
  // Off-diagonal blocks |1><2| (x) |1><2| appear in the projector expansion.
  const Matrix bell = oracle::bell_projector(2);
  CHECK(bell(0, 3) == Complex(0.5));
  CHECK(bell(3, 0) == Complex(0.5));
}

TEST_CASE("Hilbert-Schmidt inner product basics") {
  for (int d = 2; d <= 5; ++d)
    CHECK(hs_inner(Matrix::identity(d), Matrix::identity(d)) == Complex(d));
  CHECK_THROWS_AS(hs_inner(Matrix::identity(2), Matrix::identity(3)), DimensionError);
  CHECK_THAT(hs_norm(Matrix::identity(3)), WithinAbs(std::sqrt(3.0), 1e-15));
}

TEST_CASE("hs_inner is conjugate symmetric and hs_norm multiplicative over kron") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    GaussianStream s(seed);
    const auto nn = static_cast<std::size_t>(n);
    const Matrix a(nn, nn, s.vector(nn * nn));
    const Matrix b(nn, nn, s.vector(nn * nn));
    const Complex ab = hs_inner(a, b);
    const Complex ba = hs_inner(b, a);
    CHECK(std::abs(ab - std::conj(ba)) <= 1e-12);
    CHECK_THAT(hs_norm(kron(a, b)), WithinAbs(hs_norm(a) * hs_norm(b), 1e-12));
  }
}

TEST_CASE("hs_inner_kron agrees with the materialised Kronecker product") {
  GaussianStream s(11);
  for (int d = 2; d <= 4; ++d) {
    const auto n = static_cast<std::size_t>(d);
    const Matrix a(n, n, s.vector(n * n));
    const Matrix b(n, n, s.vector(n * n));
    const Matrix rho(n * n, n * n, s.vector(n * n * n * n));
    CHECK(std::abs(hs_inner_kron(a, b, rho) - hs_inner(kron(a, b), rho)) <= 1e-12);
  }
}

TEST_CASE("eigenvalues of simple matrices") {
  const auto e1 = hermitian_eigenvalues(Matrix::diagonal({1, 0, -1}));
  REQUIRE(e1.size() == 3);
  CHECK_THAT(e1[0], WithinAbs(-1, 1e-15));
  CHECK_THAT(e1[1], WithinAbs(0, 1e-15));
  CHECK_THAT(e1[2], WithinAbs(1, 1e-15));

  const auto e2 = hermitian_eigenvalues(oracle::sigma(1));
  CHECK_THAT(e2[0], WithinAbs(-1, 1e-12));
  CHECK_THAT(e2[1], WithinAbs(1, 1e-12));

  const auto e3 = hermitian_eigenvalues(oracle::sigma(2));
  CHECK_THAT(e3[0], WithinAbs(-1, 1e-12));
  CHECK_THAT(e3[1], WithinAbs(1, 1e-12));

  const auto bell = hermitian_eigenvalues(oracle::bell_projector(2));
  const std::vector<double> expected{0, 0, 0, 1};
  for (std::size_t i = 0; i < 4; ++i) CHECK_THAT(bell[i], WithinAbs(expected[i], 1e-12));
}

TEST_CASE("eigenvalues reject non-Hermitian input") {
  CHECK_THROWS_AS(hermitian_eigenvalues(Matrix{{0, 1}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(hermitian_eigenvalues(Matrix{{1, 2, 3}}), DimensionError);
  CHECK_THROWS_AS(is_positive_semidefinite(Matrix{{0, 1}, {0, 0}}), ValidationError);
}

TEST_CASE("Jacobi recovers a planted spectrum") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 2 + seed % 15;
    std::vector<double> lambda(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3, 3);
    for (double& x : lambda) x = u(rng);
    const Matrix h = oracle::hermitian_with_spectrum(lambda, seed);
    std::sort(lambda.begin(), lambda.end());
    const auto got = hermitian_eigenvalues(h);
    REQUIRE(got.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK_THAT(got[i], WithinAbs(lambda[i], 1e-9));
  }
}

TEST_CASE("Jacobi agrees with Eigen and preserves the trace") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const int n = 1 + static_cast<int>(seed % 16);
    const Matrix h = oracle::random_hermitian(n, seed);
    const auto got = hermitian_eigenvalues(h);
    const auto ref = oracle::eigenvalues(h);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK_THAT(got[i], WithinAbs(ref[i], 1e-9));
    const double sum = std::accumulate(got.begin(), got.end(), 0.0);
    CHECK_THAT(sum, WithinAbs(h.trace().real(), 1e-9));
  }
}

TEST_CASE("Jacobi handles degenerate spectra and larger dimensions") {
  const Matrix h = oracle::hermitian_with_spectrum({2, 2, 2, -1, -1, 0, 0, 0}, 5);
  const auto got = hermitian_eigenvalues(h);
  const std::vector<double> expected{-1, -1, 0, 0, 0, 2, 2, 2};
  for (std::size_t i = 0; i < got.size(); ++i) CHECK_THAT(got[i], WithinAbs(expected[i], 1e-9));

  const Matrix big = oracle::random_hermitian(48, 9);
  const auto a = hermitian_eigenvalues(big);
  const auto b = oracle::eigenvalues(big);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK_THAT(a[i], WithinAbs(b[i], 1e-9));
}

TEST_CASE("positive semidefinite checks") {
  for (int d = 2; d <= 5; ++d) CHECK(is_positive_semidefinite(oracle::maximally_mixed(d)));
  CHECK_FALSE(is_positive_semidefinite(Matrix::diagonal({1, -1e-3}), 1e-9));
  const double alpha = -1.0 / 8.0;
  const Matrix iso = alpha * oracle::bell_projector(3) + (1 - alpha) * oracle::maximally_mixed(9);
  CHECK(is_positive_semidefinite(iso));
  const auto spectrum = oracle::eigenvalues(iso);
  CHECK_THAT(spectrum.front(), WithinAbs(0.0, 1e-12));
}

TEST_CASE("partial transpose") {
  // Partial transpose of the qubit Bell projector has eigenvalue -1/2.
  const auto spectrum = hermitian_eigenvalues(partial_transpose(oracle::bell_projector(2), 2, 2));
  CHECK_THAT(spectrum.front(), WithinAbs(-0.5, 1e-12));
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, Complex(0, 1)}, {5, 6}};
  CHECK(partial_transpose(kron(a, b), 2, 2) == kron(a, b.transpose()));
  CHECK_THROWS_AS(partial_transpose(Matrix::identity(5), 2, 2), DimensionError);
}

TEST_CASE("matrix algebra") {
  const Matrix a{{1, Complex(0, 1)}, {2, 3}};
  CHECK(a.adjoint() == Matrix{{1, 2}, {Complex(0, -1), 3}});
  CHECK(a.trace() == Complex(4));
  CHECK((a * Matrix::identity(2)) == a);
  CHECK((a - a) == Matrix::zeros(2, 2));
  CHECK_THROWS_AS(a * Matrix::identity(3), DimensionError);
  CHECK(Matrix::unit(3, 0, 2)(0, 2) == Complex(1));
  CHECK(hermiticity_defect(a) == Catch::Approx(std::abs(Complex(2) - Complex(0, -1))));
}

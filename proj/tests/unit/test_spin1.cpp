#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "qudit/errors.hpp"
#include "qudit/spin1.hpp"
#include "qudit/states.hpp"

using namespace qudit;
using Catch::Matchers::WithinAbs;

namespace {
const Complex I(0, 1);
}

TEST_CASE("spin-1 matrices") {
  const auto& s = spin_operators();
  CHECK(s.sz == Matrix::diagonal({1, 0, -1}));
  CHECK(s.axy == Matrix{{0, 0, -I}, {0, 0, 0}, {I, 0, 0}});
  CHECK(s.hbar == 1.0);
  CHECK(max_abs_diff(s.sx * s.sx + s.sy * s.sy + s.sz * s.sz, 2.0 * Matrix::identity(3)) <= 1e-15);
  CHECK(max_abs_diff(s.sx * s.sy - s.sy * s.sx, I * s.sz) <= 1e-15);
  CHECK(max_abs_diff(s.sx * s.sx, s.sx2) <= 1e-15);
  CHECK(max_abs_diff(s.sy * s.sy, s.sy2) <= 1e-15);
  CHECK(max_abs_diff(s.sx * s.sy + s.sy * s.sx, s.axy) <= 1e-15);
  CHECK(max_abs_diff(s.sy * s.sz + s.sz * s.sy, s.ayz) <= 1e-15);
  CHECK(max_abs_diff(s.sz * s.sx + s.sx * s.sz, s.azx) <= 1e-15);
  for (const Matrix* m : {&s.sx, &s.sy, &s.sz, &s.sx2, &s.sy2, &s.axy, &s.ayz, &s.azx})
    CHECK(is_hermitian(*m, 0.0));
}

TEST_CASE("Gell-Mann matrices from spin operators") {
  const auto basis = ggm_basis(3);
  for (const auto& e : basis.elements()) {
    INFO(to_string(e.label));
    CHECK(max_abs_diff(gellmann_from_spin(e.label), e.matrix) <= 1e-12);
  }
  CHECK_THROWS_AS(gellmann_from_spin(PobLabel{1, 0}), InvalidArgument);
  CHECK_THROWS_AS(gellmann_from_spin(GgmLabel::symmetric(1, 4)), InvalidArgument);
  CHECK_THROWS_AS(gellmann_from_spin(GgmLabel::diagonal(3)), InvalidArgument);
}

TEST_CASE("qutrit isotropic witness") {
  const auto a = a_iso_qutrit();
  CHECK(max_abs_diff(a.op, optimal_witness_iso(3).op) <= 1e-9);
  CHECK_THAT(eval_witness(a, nearest_separable_iso(3)), WithinAbs(0.0, 1e-9));
  CHECK_THAT(eval_witness(a, bell_state(3)), WithinAbs(-M_SQRT1_2, 1e-9));
}

TEST_CASE("expectation report on reference states") {
  const auto bell = witness_expectation_terms(bell_state(3));
  CHECK(bell.terms.size() == 15);
  CHECK_THAT(bell.lambda_assembled, WithinAbs(16.0 / 3.0, 1e-9));
  CHECK_THAT(bell.lambda_direct, WithinAbs(16.0 / 3.0, 1e-9));
  CHECK_THAT(bell.a_iso, WithinAbs(-M_SQRT1_2, 1e-9));

  const auto mixed = witness_expectation_terms(DensityMatrix(oracle::maximally_mixed(9)));
  CHECK_THAT(mixed.lambda_assembled, WithinAbs(0.0, 1e-12));
  CHECK_THAT(mixed.a_iso, WithinAbs(1.0 / (3.0 * std::sqrt(2.0)), 1e-12));
  CHECK(mixed.terms[0].name == "Sx*Sx");
  CHECK(mixed.terms[3].name == "1*1");
  CHECK(mixed.terms[3].coefficient == Catch::Approx(16.0 / 3.0));

  CHECK_THROWS_AS(witness_expectation_terms(bell_state(2)), DimensionError);
}

TEST_CASE("expectation assembly matches the direct trace on random states") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto rho = random_density_matrix(9, seed);
    const auto r = witness_expectation_terms(rho);
    CHECK_THAT(r.lambda_assembled, WithinAbs(r.lambda_direct, 1e-9));
    CHECK_THAT(r.a_iso, WithinAbs(eval_witness(a_iso_qutrit(), rho), 1e-9));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <atomic>
#include <thread>

#include "oracles.hpp"
#include "qudit/angular.hpp"
#include "qudit/errors.hpp"

using namespace qudit;
using Catch::Matchers::WithinAbs;

namespace {

HalfInteger h(int twice) { return HalfInteger::from_twice(twice); }

double cg(int j1, int m1, int j2, int m2, int J, int M) {
  return clebsch_gordan({h(j1), h(m1), h(j2), h(m2), h(J), h(M)});
}

}  // namespace

TEST_CASE("HalfInteger arithmetic") {
  CHECK(HalfInteger::spin_of_dimension(4).twice() == 3);
  CHECK(HalfInteger::spin_of_dimension(4).to_string() == "3/2");
  CHECK(HalfInteger::from_int(2).to_string() == "2");
  CHECK((h(1) + h(1)) == HalfInteger::from_int(1));
  CHECK((-h(3)).twice() == -3);
  CHECK(h(1) < h(2));
  CHECK(satisfies_triangle(h(1), h(1), h(2)));
  CHECK_FALSE(satisfies_triangle(h(1), h(1), h(1)));
  CHECK_FALSE(satisfies_triangle(h(2), h(2), h(6)));
}

TEST_CASE("spin-1/2 coupling values") {
  CHECK_THAT(cg(1, 1, 1, 1, 2, 2), WithinAbs(1.0, 1e-15));
  CHECK_THAT(cg(1, 1, 1, -1, 0, 0), WithinAbs(M_SQRT1_2, 1e-15));
  CHECK_THAT(cg(1, -1, 1, 1, 0, 0), WithinAbs(-M_SQRT1_2, 1e-15));
  CHECK(cg(1, 1, 1, -1, 2, 2) == 0.0);
  CHECK(cg(1, 1, 1, 1, 6, 2) == 0.0);
}

TEST_CASE("singlet amplitude matches 4x4 diagonalisation") {
  const Matrix basis = oracle::coupled_basis_half_half();
  // Column 0 is the singlet; |up,dn> is index 1.
  CHECK_THAT(std::abs(basis(1, 0)), WithinAbs(std::abs(cg(1, 1, 1, -1, 0, 0)), 1e-12));
  CHECK_THAT(std::abs(basis(2, 0)), WithinAbs(std::abs(cg(1, -1, 1, 1, 0, 0)), 1e-12));
  // Triplet M = 0 lives in the span of columns 1..3; its |up,dn> amplitude
  // has the same magnitude.
  double weight = 0;
  for (std::size_t k = 1; k < 4; ++k) weight += std::norm(basis(1, k));
  CHECK_THAT(weight, WithinAbs(std::pow(cg(1, 1, 1, -1, 2, 0), 2), 1e-12));
}

TEST_CASE("Racah values agree with the lowering-operator construction") {
  for (int j1 = 0; j1 <= 6; ++j1)
    for (int j2 = 0; j2 <= 6; ++j2)
      for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2)
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2) {
            const int M = m1 + m2;
            if (std::abs(M) > J) continue;
            INFO("2j1=" << j1 << " 2m1=" << m1 << " 2j2=" << j2 << " 2m2=" << m2 << " 2J=" << J);
            CHECK_THAT(cg(j1, m1, j2, m2, J, M),
                       WithinAbs(oracle::cg_by_lowering(j1, m1, j2, m2, J, M), 1e-12));
          }
}

TEST_CASE("invalid labels are rejected") {
  CHECK_THROWS_AS(cg(-1, 0, 1, 1, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(cg(1, 3, 1, 1, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(cg(2, 1, 1, 1, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(cg(1, 1, 1, 1, 2, 4), InvalidArgument);
}

TEST_CASE("orthogonality of coupling coefficients") {
  for (int j1 = 0; j1 <= 8; ++j1)
    for (int j2 = 0; j2 <= 8; ++j2)
      for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2)
        for (int Jp = std::abs(j1 - j2); Jp <= j1 + j2; Jp += 2)
          for (int M = -std::min(J, Jp); M <= std::min(J, Jp); M += 2) {
            double sum = 0;
            for (int m1 = -j1; m1 <= j1; m1 += 2) {
              const int m2 = M - m1;
              if (std::abs(m2) > j2) continue;
              sum += cg(j1, m1, j2, m2, J, M) * cg(j1, m1, j2, m2, Jp, M);
            }
            CHECK_THAT(sum, WithinAbs(J == Jp ? 1.0 : 0.0, 1e-12));
          }
}

TEST_CASE("reflection symmetry") {
  for (int j1 = 0; j1 <= 7; ++j1)
    for (int j2 = 0; j2 <= 7; ++j2)
      for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2)
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2) {
            const int M = m1 + m2;
            if (std::abs(M) > J) continue;
            const int phase_exp = (j1 + j2 - J) / 2;
            const double sign = phase_exp % 2 == 0 ? 1.0 : -1.0;
            CHECK_THAT(cg(j1, m1, j2, m2, J, M),
                       WithinAbs(sign * cg(j1, -m1, j2, -m2, J, -M), 1e-13));
          }
}

TEST_CASE("first sum rule") {
  auto [sum, expected] = cg_sum_rule_check(h(1), h(1), h(1), h(1), h(1), h(1));
  CHECK_THAT(sum, WithinAbs(1.0, 1e-12));
  CHECK(expected == 1.0);
  std::tie(sum, expected) = cg_sum_rule_check(h(1), h(1), h(1), h(1), h(1), h(-1));
  CHECK_THAT(sum, WithinAbs(0.0, 1e-12));
  CHECK(expected == 0.0);
  std::tie(sum, expected) = cg_sum_rule_check(h(2), h(2), h(0), h(0), h(0), h(0));
  CHECK_THAT(sum, WithinAbs(1.0, 1e-12));

  for (int a = 0; a <= 7; ++a)
    for (int b = 0; b <= 7; ++b)
      for (int beta = -b; beta <= b; beta += 2)
        for (int betap = -b; betap <= b; betap += 2)
          for (int alpha = -a; alpha <= a; alpha += 2)
            for (int alphap = -a; alphap <= a; alphap += 2) {
              const auto [s, e] =
                  cg_sum_rule_check(h(a), h(b), h(beta), h(betap), h(alpha), h(alphap));
              CHECK_THAT(s, WithinAbs(e, 1e-12));
            }
}

TEST_CASE("companion sum rule") {
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; b <= 7; ++b)
      for (int bp = 0; bp <= 7; ++bp) {
        if ((b - bp) % 2 != 0) continue;
        for (int c = 0; c <= 7; ++c) {
          if ((a + b + c) % 2 != 0) continue;
          for (int beta = -b; beta <= b; beta += 2)
            for (int betap = -bp; betap <= bp; betap += 2) {
              const auto [s, e] =
                  cg_companion_sum_rule_check(h(a), h(b), h(bp), h(beta), h(betap), h(c));
              CHECK_THAT(s, WithinAbs(e, 1e-12));
            }
        }
      }
}

TEST_CASE("memoised and uncached values agree under concurrent use") {
  std::vector<std::thread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int j = 0; j <= 12; ++j)
        for (int m = -j; m <= j; m += 2) {
          const CgLabel label{h(j), h(m), h(4), h(0), h(j), h(m)};
          if (clebsch_gordan(label) != clebsch_gordan_uncached(label)) ++mismatches;
        }
      (void)t;
    });
  }
  for (auto& th : threads) th.join();
  CHECK(mismatches == 0);
}

TEST_CASE("large spins stay accurate") {
  // Stretched coupling is always 1; the top-down coupling has a closed form.
  for (int j = 1; j <= 31; ++j) {
    CHECK_THAT(cg(j, j, j, j, 2 * j, 2 * j), WithinAbs(1.0, 1e-14));
    double sum = 0;
    for (int m = -j; m <= j; m += 2) sum += std::pow(cg(j, m, j, -m, 0, 0), 2);
    CHECK_THAT(sum, WithinAbs(1.0, 1e-12));
    CHECK_THAT(std::abs(cg(j, j, j, -j, 0, 0)), WithinAbs(1.0 / std::sqrt(j + 1.0), 1e-14));
  }
}

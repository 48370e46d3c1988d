#include "qudit/angular.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "qudit/errors.hpp"

namespace qudit {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Integer value of a HalfInteger known to be integral.
int as_int(HalfInteger h) { return h.twice() / 2; }

cpp_int factorial(int n) {
  // Largest argument reached is j1 + j2 + J + 1 <= 3 * 31/2 + 1 for d <= 32;
  // the table grows on demand for larger inputs.
  static std::vector<cpp_int> table{1};
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n)
    table.push_back(table.back() * static_cast<int>(table.size()));
  return table[static_cast<std::size_t>(n)];
}

void validate_pair(HalfInteger j, HalfInteger m, const char* name) {
  if (j.twice() < 0)
    throw InvalidArgument(std::string("clebsch_gordan: negative ") + name);
  if (std::abs(m.twice()) > j.twice())
    throw InvalidArgument(std::string("clebsch_gordan: |m| > j for ") + name);
  if ((j.twice() - m.twice()) % 2 != 0)
    throw InvalidArgument(std::string("clebsch_gordan: j - m not integral for ") + name);
}

void validate(const CgLabel& l) {
  validate_pair(l.j1, l.m1, "j1");
  validate_pair(l.j2, l.m2, "j2");
  validate_pair(l.J, l.M, "J");
}

struct MemoTable {
  std::shared_mutex mutex;
  std::unordered_map<CgLabel, double> values;
};

MemoTable& memo() {
  static MemoTable table;
  return table;
}

// All j values (as twice) between |a - b| and a + b in integer steps.
std::vector<HalfInteger> coupled_range(HalfInteger a, HalfInteger b) {
  std::vector<HalfInteger> out;
  for (int t = std::abs(a.twice() - b.twice()); t <= a.twice() + b.twice(); t += 2)
    out.push_back(HalfInteger::from_twice(t));
  return out;
}

// Projections -j, -j+1, ..., j.
std::vector<HalfInteger> projections(HalfInteger j) {
  std::vector<HalfInteger> out;
  for (int t = -j.twice(); t <= j.twice(); t += 2) out.push_back(HalfInteger::from_twice(t));
  return out;
}

}  // namespace

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

bool satisfies_triangle(HalfInteger j1, HalfInteger j2, HalfInteger j3) {
  if ((j1.twice() + j2.twice() + j3.twice()) % 2 != 0) return false;
  return std::abs(j1.twice() - j2.twice()) <= j3.twice() &&
         j3.twice() <= j1.twice() + j2.twice();
}

double clebsch_gordan_uncached(const CgLabel& l) {
  validate(l);
  if (l.m1 + l.m2 != l.M) return 0.0;
  if (!satisfies_triangle(l.j1, l.j2, l.J)) return 0.0;

  const int j1pj2mJ = as_int(l.j1 + l.j2 - l.J);
  const int j1mm1 = as_int(l.j1 - l.m1);
  const int j2pm2 = as_int(l.j2 + l.m2);
  const int Jmj2pm1 = as_int(l.J - l.j2 + l.m1);
  const int Jmj1mm2 = as_int(l.J - l.j1 - l.m2);

  // Racah sum over k where every factorial argument is non-negative.
  const int k_min = std::max({0, -Jmj2pm1, -Jmj1mm2});
  const int k_max = std::min({j1pj2mJ, j1mm1, j2pm2});
  cpp_rational sum = 0;
  for (int k = k_min; k <= k_max; ++k) {
    const cpp_int denom = factorial(k) * factorial(j1pj2mJ - k) * factorial(j1mm1 - k) *
                          factorial(j2pm2 - k) * factorial(Jmj2pm1 + k) *
                          factorial(Jmj1mm2 + k);
    const cpp_rational term(cpp_int(1), denom);
    sum += (k % 2 == 0) ? term : cpp_rational(-term);
  }
  if (sum == 0) return 0.0;

  const cpp_int num = cpp_int(l.J.twice() + 1) * factorial(as_int(l.J + l.j1 - l.j2)) *
                      factorial(as_int(l.J - l.j1 + l.j2)) * factorial(j1pj2mJ) *
                      factorial(as_int(l.J + l.M)) * factorial(as_int(l.J - l.M)) *
                      factorial(j1mm1) * factorial(as_int(l.j1 + l.m1)) *
                      factorial(as_int(l.j2 - l.m2)) * factorial(j2pm2);
  const cpp_rational prefactor(num, factorial(as_int(l.j1 + l.j2 + l.J) + 1));
  const cpp_rational squared = prefactor * sum * sum;
  const double magnitude = std::sqrt(squared.convert_to<double>());
  return sum > 0 ? magnitude : -magnitude;
}

double clebsch_gordan(const CgLabel& label) {
  auto& table = memo();
  {
    std::shared_lock lock(table.mutex);
    if (auto it = table.values.find(label); it != table.values.end()) return it->second;
  }
  const double value = clebsch_gordan_uncached(label);
  std::unique_lock lock(table.mutex);
  table.values.emplace(label, value);
  return value;
}

std::pair<double, double> cg_sum_rule_check(HalfInteger a, HalfInteger b, HalfInteger beta,
                                            HalfInteger beta_prime, HalfInteger alpha,
                                            HalfInteger alpha_prime) {
  double sum = 0.0;
  for (HalfInteger c : coupled_range(a, b)) {
    for (HalfInteger gamma : projections(c)) {
      if (alpha + gamma != beta || alpha_prime + gamma != beta_prime) continue;
      const double weight = (c.twice() + 1.0) / (b.twice() + 1.0);
      sum += weight * clebsch_gordan({a, alpha, c, gamma, b, beta}) *
             clebsch_gordan({a, alpha_prime, c, gamma, b, beta_prime});
    }
  }
  const double expected = (alpha == alpha_prime && beta == beta_prime) ? 1.0 : 0.0;
  return {sum, expected};
}

std::pair<double, double> cg_companion_sum_rule_check(HalfInteger a, HalfInteger b,
                                                      HalfInteger b_prime, HalfInteger beta,
                                                      HalfInteger beta_prime, HalfInteger c) {
  double sum = 0.0;
  for (HalfInteger alpha : projections(a)) {
    for (HalfInteger gamma : projections(c)) {
      if (alpha + beta != gamma || alpha + beta_prime != gamma) continue;
      sum += clebsch_gordan({a, alpha, b, beta, c, gamma}) *
             clebsch_gordan({a, alpha, b_prime, beta_prime, c, gamma});
    }
  }
  double expected = 0.0;
  if (b == b_prime && beta == beta_prime && satisfies_triangle(a, b, c))
    expected = (c.twice() + 1.0) / (b.twice() + 1.0);
  return {sum, expected};
}

}  // namespace qudit

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>

namespace qudit {

/// Angular-momentum quantum number stored as twice its value, so half-integers
/// are exact.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }
  /// s = (d - 1) / 2 for a d-level system.
  static constexpr HalfInteger spin_of_dimension(int d) { return HalfInteger(d - 1); }

  constexpr int twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  constexpr double value() const noexcept { return 0.5 * twice_; }

  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ - b.twice_);
  }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  std::string to_string() const;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Label of C^{J M}_{j1 m1, j2 m2}.
struct CgLabel {
  HalfInteger j1, m1, j2, m2, J, M;

  friend constexpr bool operator==(const CgLabel&, const CgLabel&) = default;
};

/// True when |j1 - j2| <= j3 <= j1 + j2 and j1 + j2 + j3 is an integer.
bool satisfies_triangle(HalfInteger j1, HalfInteger j2, HalfInteger j3);

/// Clebsch-Gordan coefficient C^{J M}_{j1 m1, j2 m2} (Condon-Shortley phase).
///
/// Evaluated with the Racah closed form. The squared coefficient is
/// accumulated as an exact rational from big-integer factorials; only the
/// final square root is taken in floating point. Returns exactly 0 when
/// m1 + m2 != M or the triangle rule fails. Results are memoised; the table is
/// safe for concurrent readers and writers.
///
/// Throws InvalidArgument if any j is negative, |m| > j, or j - m is not an
/// integer.
double clebsch_gordan(const CgLabel& label);

/// The exact Racah-formula value, bypassing the memo table.
double clebsch_gordan_uncached(const CgLabel& label);

/// (computed, expected) for
///   sum_{c, gamma} (2c+1)/(2b+1) C^{b beta}_{a alpha, c gamma} C^{b beta'}_{a alpha', c gamma}
///     = delta_{alpha alpha'} delta_{beta beta'}.
std::pair<double, double> cg_sum_rule_check(HalfInteger a, HalfInteger b, HalfInteger beta,
                                            HalfInteger beta_prime, HalfInteger alpha,
                                            HalfInteger alpha_prime);

/// (computed, expected) for
///   sum_{alpha, gamma} C^{c gamma}_{a alpha, b beta} C^{c gamma}_{a alpha, b' beta'}
///     = (2c+1)/(2b+1) delta_{b b'} delta_{beta beta'}
/// when (a, b, c) obey the triangle rule; the expected value is 0 otherwise.
std::pair<double, double> cg_companion_sum_rule_check(HalfInteger a, HalfInteger b,
                                                      HalfInteger b_prime, HalfInteger beta,
                                                      HalfInteger beta_prime, HalfInteger c);

}  // namespace qudit

template <>
struct std::hash<qudit::CgLabel> {
  std::size_t operator()(const qudit::CgLabel& l) const noexcept {
    std::size_t h = 0;
    for (int t : {l.j1.twice(), l.m1.twice(), l.j2.twice(), l.m2.twice(), l.J.twice(),
                  l.M.twice()})
      h = h * 131 + static_cast<std::size_t>(t + 64);
    return h;
  }
};

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qudit/linalg.hpp"

namespace qudit {

enum class BasisFamily { GGM, POB, WOB };

/// "ggm", "pob" or "wob".
std::string_view to_string(BasisFamily family);
/// Case-insensitive inverse of to_string; throws InvalidArgument.
BasisFamily parse_family(std::string_view text);

/// Generalized Gell-Mann label. Indices are 1-based: symmetric/antisymmetric
/// use 1 <= j < k <= d, diagonal uses l in [1, d-1] (stored in `j`).
struct GgmLabel {
  enum class Kind { Symmetric, Antisymmetric, Diagonal };
  Kind kind = Kind::Symmetric;
  int j = 0;
  int k = 0;

  static GgmLabel symmetric(int j, int k) { return {Kind::Symmetric, j, k}; }
  static GgmLabel antisymmetric(int j, int k) { return {Kind::Antisymmetric, j, k}; }
  static GgmLabel diagonal(int l) { return {Kind::Diagonal, l, 0}; }
  int l() const noexcept { return j; }

  friend bool operator==(const GgmLabel&, const GgmLabel&) = default;
};

/// Polarization operator T_LM, 0 <= L <= d-1, -L <= M <= L.
struct PobLabel {
  int L = 0;
  int M = 0;
  friend bool operator==(const PobLabel&, const PobLabel&) = default;
};

/// Weyl operator U_nm, 0 <= n, m <= d-1.
struct WobLabel {
  int n = 0;
  int m = 0;
  friend bool operator==(const WobLabel&, const WobLabel&) = default;
};

using BasisElementLabel = std::variant<GgmLabel, PobLabel, WobLabel>;

BasisFamily family_of(const BasisElementLabel& label);

/// "s:j,k" / "a:j,k" / "d:l" for GGM, "L,M" for POB, "n,m" for WOB.
std::string to_string(const BasisElementLabel& label);
BasisElementLabel parse_label(BasisFamily family, std::string_view text);

struct BasisElement {
  BasisElementLabel label;
  Matrix matrix;
};

/// Ordered operator basis of one family with Tr(A_i^dagger A_j) = N delta_ij.
///
/// GGM holds the d^2 - 1 traceless generators only; POB and WOB hold all d^2
/// elements with the identity-proportional one (T_00, U_00) at index 0.
class OperatorBasis {
 public:
  OperatorBasis(BasisFamily family, int dim, std::vector<BasisElement> elements,
                double norm_constant);

  BasisFamily family() const noexcept { return family_; }
  int dim() const noexcept { return dim_; }
  double norm_constant() const noexcept { return norm_constant_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const BasisElement> elements() const noexcept { return elements_; }
  const BasisElement& operator[](std::size_t i) const { return elements_.at(i); }

  bool contains_identity_element() const noexcept { return family_ != BasisFamily::GGM; }
  /// The d^2 - 1 elements a Bloch vector is expanded over.
  std::span<const BasisElement> traceless_elements() const noexcept;

  std::optional<std::size_t> index_of(const BasisElementLabel& label) const;

 private:
  BasisFamily family_;
  int dim_;
  std::vector<BasisElement> elements_;
  double norm_constant_;
};

Matrix ggm_element(int d, const GgmLabel& label);
OperatorBasis ggm_basis(int d);

/// T_LM = sqrt((2L+1)/(2s+1)) sum_{k,l} C^{s m_k}_{s m_l, L M} |k><l|,
/// s = (d-1)/2, m_k = s - k + 1 for 1-based k.
Matrix pob_element(int d, int L, int M);
OperatorBasis pob_basis(int d);

/// U_nm = sum_k e^{2 pi i k n / d} |k><(k+m) mod d|.
Matrix wob_element(int d, int n, int m);
OperatorBasis wob_basis(int d);

OperatorBasis make_basis(BasisFamily family, int d);
/// Process-wide cache of make_basis results; safe to call concurrently.
std::shared_ptr<const OperatorBasis> shared_basis(BasisFamily family, int d);

Matrix element_matrix(int d, const BasisElementLabel& label);
double norm_constant(BasisFamily family, int d);

/// G_ij = Tr(A_i^dagger A_j) over every stored element.
std::vector<std::vector<Complex>> gram_matrix(const OperatorBasis& basis);

/// e^{2 pi i k / d}, evaluated from cos/sin of the reduced angle.
Complex root_of_unity(int d, long long k);
/// sum_{n=0}^{d-1} e^{2 pi i n x / d}; equals d when x = 0 mod d, else 0.
Complex root_of_unity_sum(int d, long long x);

}  // namespace qudit

#include "qudit/bases.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

#include "qudit/angular.hpp"
#include "qudit/errors.hpp"

namespace qudit {

namespace {

void require_dimension(int d, const char* what) {
  if (d < 2) {
    std::ostringstream msg;
    msg << what << ": dimension must be >= 2, got " << d;
    throw InvalidArgument(msg.str());
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// Parses "x,y" into two integers.
std::pair<int, int> parse_pair(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw InvalidArgument("malformed label: " + std::string(text));
  auto parse_int = [&](std::string_view part) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw InvalidArgument("malformed label: " + std::string(text));
    return value;
  };
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

void validate_ggm(int d, const GgmLabel& label) {
  const bool ok = label.kind == GgmLabel::Kind::Diagonal
                      ? (label.j >= 1 && label.j <= d - 1)
                      : (label.j >= 1 && label.j < label.k && label.k <= d);
  if (!ok) {
    throw InvalidArgument("ggm_element: label " + to_string(BasisElementLabel(label)) +
                          " invalid for d = " + std::to_string(d));
  }
}

}  // namespace

std::string_view to_string(BasisFamily family) {
  switch (family) {
    case BasisFamily::GGM: return "ggm";
    case BasisFamily::POB: return "pob";
    case BasisFamily::WOB: return "wob";
  }
  return "?";
}

BasisFamily parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ggm" || lower == "ggb") return BasisFamily::GGM;
  if (lower == "pob") return BasisFamily::POB;
  if (lower == "wob") return BasisFamily::WOB;
  throw InvalidArgument("unknown basis family '" + std::string(text) +
                        "' (expected ggm, pob or wob)");
}

BasisFamily family_of(const BasisElementLabel& label) {
  return std::visit(Overloaded{[](const GgmLabel&) { return BasisFamily::GGM; },
                               [](const PobLabel&) { return BasisFamily::POB; },
                               [](const WobLabel&) { return BasisFamily::WOB; }},
                    label);
}

std::string to_string(const BasisElementLabel& label) {
  return std::visit(
      Overloaded{[](const GgmLabel& g) {
                   switch (g.kind) {
                     case GgmLabel::Kind::Symmetric:
                       return "s:" + std::to_string(g.j) + "," + std::to_string(g.k);
                     case GgmLabel::Kind::Antisymmetric:
                       return "a:" + std::to_string(g.j) + "," + std::to_string(g.k);
                     case GgmLabel::Kind::Diagonal:
                       return "d:" + std::to_string(g.j);
                   }
                   return std::string("?");
                 },
                 [](const PobLabel& p) { return std::to_string(p.L) + "," + std::to_string(p.M); },
                 [](const WobLabel& w) { return std::to_string(w.n) + "," + std::to_string(w.m); }},
      label);
}

BasisElementLabel parse_label(BasisFamily family, std::string_view text) {
  switch (family) {
    case BasisFamily::GGM: {
      if (text.size() < 3 || text[1] != ':') throw InvalidArgument("malformed GGM label: " + std::string(text));
      const char kind = text[0];
      const auto rest = text.substr(2);
      if (kind == 'd') {
        int l = 0;
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), l);
        if (ec != std::errc() || ptr != rest.data() + rest.size())
          throw InvalidArgument("malformed GGM label: " + std::string(text));
        return GgmLabel::diagonal(l);
      }
      const auto [j, k] = parse_pair(rest);
      if (kind == 's') return GgmLabel::symmetric(j, k);
      if (kind == 'a') return GgmLabel::antisymmetric(j, k);
      throw InvalidArgument("malformed GGM label: " + std::string(text));
    }
    case BasisFamily::POB: {
      const auto [L, M] = parse_pair(text);
      return PobLabel{L, M};
    }
    case BasisFamily::WOB: {
      const auto [n, m] = parse_pair(text);
      return WobLabel{n, m};
    }
  }
  throw InvalidArgument("unknown basis family");
}

OperatorBasis::OperatorBasis(BasisFamily family, int dim, std::vector<BasisElement> elements,
                             double norm_constant)
    : family_(family), dim_(dim), elements_(std::move(elements)), norm_constant_(norm_constant) {
  const std::size_t d2 = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  const std::size_t expected = family == BasisFamily::GGM ? d2 - 1 : d2;
  if (elements_.size() != expected)
    throw InvalidArgument("OperatorBasis: wrong element count for family");
}

std::span<const BasisElement> OperatorBasis::traceless_elements() const noexcept {
  std::span<const BasisElement> all = elements_;
  return contains_identity_element() ? all.subspan(1) : all;
}

std::optional<std::size_t> OperatorBasis::index_of(const BasisElementLabel& label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].label == label) return i;
  return std::nullopt;
}

Matrix ggm_element(int d, const GgmLabel& label) {
  require_dimension(d, "ggm_element");
  validate_ggm(d, label);
  const std::size_t n = static_cast<std::size_t>(d);
  const std::size_t j = static_cast<std::size_t>(label.j - 1);
  switch (label.kind) {
    case GgmLabel::Kind::Symmetric: {
      const std::size_t k = static_cast<std::size_t>(label.k - 1);
      return Matrix::unit(n, j, k) + Matrix::unit(n, k, j);
    }
    case GgmLabel::Kind::Antisymmetric: {
      const std::size_t k = static_cast<std::size_t>(label.k - 1);
      const Complex i(0.0, 1.0);
      return -i * Matrix::unit(n, j, k) + i * Matrix::unit(n, k, j);
    }
    case GgmLabel::Kind::Diagonal: {
      const int l = label.l();
      const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
      std::vector<double> diag(n, 0.0);
      for (int i = 0; i < l; ++i) diag[static_cast<std::size_t>(i)] = scale;
      diag[static_cast<std::size_t>(l)] = -l * scale;
      return Matrix::diagonal(diag);
    }
  }
  throw InvalidArgument("ggm_element: unknown kind");
}

OperatorBasis ggm_basis(int d) {
  require_dimension(d, "ggm_basis");
  std::vector<BasisElement> elements;
  elements.reserve(static_cast<std::size_t>(d * d - 1));
  for (int j = 1; j <= d; ++j)
    for (int k = j + 1; k <= d; ++k) {
      const auto label = GgmLabel::symmetric(j, k);
      elements.push_back({label, ggm_element(d, label)});
    }
  for (int j = 1; j <= d; ++j)
    for (int k = j + 1; k <= d; ++k) {
      const auto label = GgmLabel::antisymmetric(j, k);
      elements.push_back({label, ggm_element(d, label)});
    }
  for (int l = 1; l <= d - 1; ++l) {
    const auto label = GgmLabel::diagonal(l);
    elements.push_back({label, ggm_element(d, label)});
  }
  return OperatorBasis(BasisFamily::GGM, d, std::move(elements), 2.0);
}

Matrix pob_element(int d, int L, int M) {
  require_dimension(d, "pob_element");
  if (L < 0 || L > d - 1 || M < -L || M > L) {
    throw InvalidArgument("pob_element: (L, M) = (" + std::to_string(L) + ", " +
                          std::to_string(M) + ") invalid for d = " + std::to_string(d));
  }
  const auto s = HalfInteger::spin_of_dimension(d);
  const auto rank = HalfInteger::from_int(L);
  const auto projection = HalfInteger::from_int(M);
  // m_k = s - k for 0-based k.
  auto m_of = [&](std::size_t k) { return HalfInteger::from_twice(d - 1 - 2 * static_cast<int>(k)); };
  const double scale = std::sqrt((2.0 * L + 1.0) / d);
  const std::size_t n = static_cast<std::size_t>(d);
  return Matrix::generate(n, n, [&](std::size_t k, std::size_t l) {
    if (m_of(l) + projection != m_of(k)) return Complex(0.0);
    return Complex(scale * clebsch_gordan({s, m_of(l), rank, projection, s, m_of(k)}));
  });
}

OperatorBasis pob_basis(int d) {
  require_dimension(d, "pob_basis");
  std::vector<BasisElement> elements;
  elements.reserve(static_cast<std::size_t>(d * d));
  for (int L = 0; L <= d - 1; ++L)
    for (int M = -L; M <= L; ++M) elements.push_back({PobLabel{L, M}, pob_element(d, L, M)});
  return OperatorBasis(BasisFamily::POB, d, std::move(elements), 1.0);
}

Complex root_of_unity(int d, long long k) {
  long long r = k % d;
  if (r < 0) r += d;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / d;
  return {std::cos(angle), std::sin(angle)};
}

Complex root_of_unity_sum(int d, long long x) {
  Complex sum = 0.0;
  for (int n = 0; n < d; ++n) sum += root_of_unity(d, static_cast<long long>(n) * x);
  return sum;
}

Matrix wob_element(int d, int n, int m) {
  require_dimension(d, "wob_element");
  if (n < 0 || n >= d || m < 0 || m >= d) {
    throw InvalidArgument("wob_element: (n, m) = (" + std::to_string(n) + ", " +
                          std::to_string(m) + ") out of range for d = " + std::to_string(d));
  }
  const std::size_t size = static_cast<std::size_t>(d);
  return Matrix::generate(size, size, [&](std::size_t row, std::size_t col) {
    if (col != (row + static_cast<std::size_t>(m)) % size) return Complex(0.0);
    return root_of_unity(d, static_cast<long long>(row) * n);
  });
}

OperatorBasis wob_basis(int d) {
  require_dimension(d, "wob_basis");
  std::vector<BasisElement> elements;
  elements.reserve(static_cast<std::size_t>(d * d));
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m) elements.push_back({WobLabel{n, m}, wob_element(d, n, m)});
  return OperatorBasis(BasisFamily::WOB, d, std::move(elements), static_cast<double>(d));
}

OperatorBasis make_basis(BasisFamily family, int d) {
  switch (family) {
    case BasisFamily::GGM: return ggm_basis(d);
    case BasisFamily::POB: return pob_basis(d);
    case BasisFamily::WOB: return wob_basis(d);
  }
  throw InvalidArgument("make_basis: unknown family");
}

std::shared_ptr<const OperatorBasis> shared_basis(BasisFamily family, int d) {
  static std::mutex mutex;
  static std::map<std::pair<BasisFamily, int>, std::shared_ptr<const OperatorBasis>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({family, d}); it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const OperatorBasis>(make_basis(family, d));
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{family, d}, std::move(basis)).first->second;
}

Matrix element_matrix(int d, const BasisElementLabel& label) {
  return std::visit(Overloaded{[d](const GgmLabel& g) { return ggm_element(d, g); },
                               [d](const PobLabel& p) { return pob_element(d, p.L, p.M); },
                               [d](const WobLabel& w) { return wob_element(d, w.n, w.m); }},
                    label);
}

double norm_constant(BasisFamily family, int d) {
  switch (family) {
    case BasisFamily::GGM: return 2.0;
    case BasisFamily::POB: return 1.0;
    case BasisFamily::WOB: return static_cast<double>(d);
  }
  return 0.0;
}

std::vector<std::vector<Complex>> gram_matrix(const OperatorBasis& basis) {
  const auto elements = basis.elements();
  std::vector<std::vector<Complex>> gram(elements.size(), std::vector<Complex>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      gram[i][j] = hs_inner(elements[i].matrix, elements[j].matrix);
  return gram;
}

}  // namespace qudit

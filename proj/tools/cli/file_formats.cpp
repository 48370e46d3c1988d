#include "file_formats.hpp"

#include <cmath>
#include <fstream>

namespace qudit::cli {

namespace {

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw FormatError(std::string(what) + " must be finite");
  return x;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json matrix_to_json(const Matrix& m, const json& meta) {
  json data = json::array();
  for (const Complex z : m.entries()) data.push_back(complex_pair(z));
  return {{"dim", {m.rows(), m.cols()}}, {"data", std::move(data)}, {"meta", meta}};
}

Matrix matrix_from_json(const json& j) {
  const json& dim = field(j, "dim");
  if (!dim.is_array() || dim.size() != 2 || !dim[0].is_number_unsigned() ||
      !dim[1].is_number_unsigned())
    throw FormatError("\"dim\" must be [rows, cols] with non-negative integers");
  const auto rows = dim[0].get<std::size_t>();
  const auto cols = dim[1].get<std::size_t>();
  const json& data = field(j, "data");
  if (!data.is_array() || data.size() != rows * cols)
    throw FormatError("\"data\" must hold rows x cols = " + std::to_string(rows * cols) +
                      " entries");
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (const json& z : data) {
    if (!z.is_array() || z.size() != 2) throw FormatError("matrix entries must be [re, im] pairs");
    entries.emplace_back(finite_number(z[0], "re"), finite_number(z[1], "im"));
  }
  return Matrix(rows, cols, std::move(entries));
}

json bloch_to_json(const BlochVector& b) {
  const auto basis = shared_basis(b.family, b.dim);
  const auto elements = basis->traceless_elements();
  json components = json::array();
  for (std::size_t i = 0; i < b.components.size(); ++i)
    components.push_back({{"label", to_string(elements[i].label)},
                          {"re", b.components[i].real()},
                          {"im", b.components[i].imag()}});
  return {{"family", to_string(b.family)}, {"dim", b.dim}, {"components", std::move(components)}};
}

BlochVector bloch_from_json(const json& j) {
  const json& family = field(j, "family");
  if (!family.is_string()) throw FormatError("\"family\" must be a string");
  BlochVector b;
  b.family = parse_family(family.get<std::string>());
  const json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<int>() < 2 || dim.get<int>() > 32)
    throw FormatError("\"dim\" must be an integer in [2, 32]");
  b.dim = dim.get<int>();
  const json& components = field(j, "components");
  const auto basis = shared_basis(b.family, b.dim);
  const auto elements = basis->traceless_elements();
  if (!components.is_array() || components.size() != elements.size())
    throw FormatError("expected " + std::to_string(elements.size()) + " components for " +
                      std::string(to_string(b.family)) + " d = " + std::to_string(b.dim));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const json& c = components[i];
    const json& label = field(c, "label");
    if (!label.is_string() || parse_label(b.family, label.get<std::string>()) != elements[i].label)
      throw FormatError("component " + std::to_string(i) + " should be labelled " +
                        to_string(elements[i].label));
    b.components.emplace_back(finite_number(field(c, "re"), "re"),
                              finite_number(field(c, "im"), "im"));
  }
  return b;
}

json basis_to_json(const OperatorBasis& basis) {
  json elements = json::array();
  for (const auto& e : basis.elements())
    elements.push_back({{"label", to_string(e.label)}, {"matrix", matrix_to_json(e.matrix)}});
  return {{"family", to_string(basis.family())},
          {"dim", basis.dim()},
          {"norm_constant", basis.norm_constant()},
          {"elements", std::move(elements)}};
}

json bipartite_to_json(const BipartiteBlochDecomposition& dec) {
  const auto basis = shared_basis(dec.family, dec.dim);
  const auto elements = basis->traceless_elements();
  json labels = json::array();
  for (const auto& e : elements) labels.push_back(to_string(e.label));
  json n = json::array();
  json m = json::array();
  for (std::size_t i = 0; i < dec.size(); ++i) {
    n.push_back(complex_pair(dec.n_coeffs[i]));
    m.push_back(complex_pair(dec.m_coeffs[i]));
  }
  const Matrix c(dec.size(), dec.size(), dec.c_matrix);
  return {{"family", to_string(dec.family)},
          {"dim", dec.dim},
          {"labels", std::move(labels)},
          {"identity", complex_pair(dec.identity)},
          {"n", std::move(n)},
          {"m", std::move(m)},
          {"c", matrix_to_json(c)}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump() << '\n';
  if (!out) throw FormatError("failed writing " + path.string());
}

}  // namespace qudit::cli

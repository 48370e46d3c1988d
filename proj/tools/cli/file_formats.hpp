#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>

#include "qudit/bases.hpp"
#include "qudit/bloch.hpp"
#include "qudit/errors.hpp"
#include "qudit/linalg.hpp"

namespace qudit::cli {

using json = nlohmann::json;

/// A file that does not follow one of the formats below.
class FormatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// MatrixFile: {"dim": [rows, cols], "data": [[re, im], ...], "meta": {...}}.
/// Doubles are written in shortest round-trip form, so write-then-read is exact.
json matrix_to_json(const Matrix& m, const json& meta = json::object());
Matrix matrix_from_json(const json& j);

/// BlochFile: {"family": "ggm", "dim": d, "components": [{"label", "re", "im"}, ...]}.
json bloch_to_json(const BlochVector& b);
/// Checks family, dimension, count and that labels appear in basis order.
BlochVector bloch_from_json(const json& j);

/// {"family", "dim", "norm_constant", "elements": [{"label", "matrix": MatrixFile}]}.
json basis_to_json(const OperatorBasis& basis);

json bipartite_to_json(const BipartiteBlochDecomposition& dec);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

inline Matrix read_matrix_file(const std::filesystem::path& path) {
  return matrix_from_json(read_json(path));
}
inline BlochVector read_bloch_file(const std::filesystem::path& path) {
  return bloch_from_json(read_json(path));
}

}  // namespace qudit::cli

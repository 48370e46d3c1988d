#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qudit/bases.hpp"

namespace qudit::cli {

/// Stable process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kNumeric = 3 };

enum class OutputFormat { Text, JsonLines };

struct Context {
  std::ostream& out;
  OutputFormat format = OutputFormat::Text;
  double tol = 1e-9;
};

struct BasisArgs {
  BasisFamily family = BasisFamily::GGM;
  int dim = 2;
  std::string out_path;
};

struct StateArgs {
  std::string kind;
  int dim = 2;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  bool bipartite = false;
  std::string out_path;
};

struct DecomposeArgs {
  std::string in_path;
  BasisFamily family = BasisFamily::GGM;
  bool bipartite = false;
  std::string out_path;
};

struct ReconstructArgs {
  std::string in_path;
  std::string out_path;
};

struct WitnessArgs {
  // "iso" or "guess"
  std::string mode;
  int dim = 2;
  double alpha = 1.0;
  BasisFamily family = BasisFamily::GGM;
  std::string guess_path;
  std::string target_path;
  int samples = 10000;
  std::uint64_t seed = 0;
};

struct Spin1Args {
  std::string in_path;
};

int cmd_basis(const Context& ctx, const BasisArgs& args);
int cmd_state(const Context& ctx, const StateArgs& args);
int cmd_decompose(const Context& ctx, const DecomposeArgs& args);
int cmd_reconstruct(const Context& ctx, const ReconstructArgs& args);
int cmd_witness(const Context& ctx, const WitnessArgs& args);
int cmd_spin1_report(const Context& ctx, const Spin1Args& args);

/// Parses argv, dispatches, and maps exceptions onto ExitCode.
/// Diagnostics go to `err`, results to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qudit::cli

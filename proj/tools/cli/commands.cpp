#include "commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "file_formats.hpp"
#include "qudit/bloch.hpp"
#include "qudit/errors.hpp"
#include "qudit/spin1.hpp"
#include "qudit/states.hpp"
#include "qudit/witness.hpp"

namespace qudit::cli {

namespace {

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

std::string num(Complex z) {
  std::ostringstream s;
  s << std::setprecision(10) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
    << "i";
  return s.str();
}

// Writes one record: the JSON object in json-lines mode, the text line otherwise.
void emit(const Context& ctx, const json& record, const std::string& text) {
  if (ctx.format == OutputFormat::JsonLines)
    ctx.out << record.dump() << '\n';
  else
    ctx.out << text << '\n';
}

DensityMatrix load_state(const Context& ctx, const std::string& path) {
  return DensityMatrix(read_matrix_file(path), ctx.tol);
}

// Gram matrix check over sparse elements: returns (measured N, max deviation).
std::pair<double, double> verify_gram(const OperatorBasis& basis) {
  struct Entry {
    std::size_t index;
    Complex value;
  };
  std::vector<std::vector<Entry>> sparse;
  for (const auto& e : basis.elements()) {
    std::vector<Entry> nz;
    const auto entries = e.matrix.entries();
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (entries[k] != Complex(0)) nz.push_back({k, entries[k]});
    sparse.push_back(std::move(nz));
  }
  const double n = basis.norm_constant();
  double measured = 0.0;
  double deviation = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto dense = basis[j].matrix.entries();
      Complex g = 0.0;
      for (const auto& [k, a] : sparse[i]) g += std::conj(a) * dense[k];
      if (i == j) measured += g.real();
      deviation = std::max(deviation, std::abs(g - Complex(i == j ? n : 0.0)));
    }
  }
  return {measured / static_cast<double>(basis.size()), deviation};
}

void emit_spin1_rows(const Context& ctx, const DensityMatrix& rho) {
  const auto report = witness_expectation_terms(rho);
  for (const auto& t : report.terms)
    emit(ctx, {{"record", "spin1_term"}, {"name", t.name}, {"coefficient", t.coefficient}, {"value", t.value}},
         "  <" + t.name + ">" + std::string(t.name.size() < 18 ? 18 - t.name.size() : 1, ' ') +
             "coeff " + num(t.coefficient) + "  value " + num(t.value));
  emit(ctx,
       {{"record", "spin1_summary"},
        {"lambda_assembled", report.lambda_assembled},
        {"lambda_direct", report.lambda_direct},
        {"a_iso", report.a_iso},
        {"hbar", report.hbar}},
       "  <Lambda> assembled " + num(report.lambda_assembled) + ", direct " +
           num(report.lambda_direct) + "; <A_iso> = " + num(report.a_iso) + " (hbar = 1)");
}

void emit_verdict(const Context& ctx, const WitnessVerdict& v) {
  emit(ctx,
       {{"record", "verdict"},
        {"samples", v.n_samples},
        {"min_sep_expectation", v.min_sep_expectation},
        {"value_on_target", v.value_on_target ? json(*v.value_on_target) : json(nullptr)},
        {"nonnegative_on_samples", v.nonnegative_on_samples()},
        {"detected", v.detected}},
       "min over " + std::to_string(v.n_samples) + " product states: " +
           num(v.min_sep_expectation) + "\n" +
           "nonnegative on samples:  " + (v.nonnegative_on_samples() ? "yes" : "no") + "\n" +
           "entanglement detected:   " + (v.detected ? "yes" : "no"));
}

}  // namespace

int cmd_basis(const Context& ctx, const BasisArgs& args) {
  const auto basis = make_basis(args.family, args.dim);
  const auto [measured, deviation] = verify_gram(basis);
  if (!args.out_path.empty()) write_json(args.out_path, basis_to_json(basis));
  emit(ctx,
       {{"record", "basis"},
        {"family", to_string(args.family)},
        {"dim", args.dim},
        {"elements", basis.size()},
        {"norm_constant", measured},
        {"gram_max_deviation", deviation}},
       std::string(to_string(args.family)) + " basis, d = " + std::to_string(args.dim) + ": " +
           std::to_string(basis.size()) + " elements, N = " + num(measured) +
           " (Gram deviation " + num(deviation) + ")");
  if (deviation > ctx.tol) throw NumericError("Gram matrix deviates from N * 1 by " + num(deviation));
  return kOk;
}

int cmd_state(const Context& ctx, const StateArgs& args) {
  const int d = args.dim;
  const int n = args.bipartite ? d * d : d;
  json meta = {{"kind", args.kind}, {"dim", d}};
  Matrix m;
  if (args.kind == "bell") {
    m = bell_state(d).matrix();
  } else if (args.kind == "iso") {
    m = isotropic({d, args.alpha}).matrix();
    meta["alpha"] = args.alpha;
  } else if (args.kind == "mixed") {
    m = Matrix::identity(static_cast<std::size_t>(n)) / static_cast<double>(n);
  } else if (args.kind == "random") {
    m = random_density_matrix(n, args.seed).matrix();
    meta["seed"] = args.seed;
  } else if (args.kind == "pure") {
    m = args.bipartite ? random_pure_product_state(d, args.seed).matrix()
                       : random_pure_state(d, args.seed).matrix();
    meta["seed"] = args.seed;
  } else {
    throw InvalidArgument("unknown state kind " + args.kind);
  }
  const json file = matrix_to_json(m, meta);
  if (args.out_path.empty()) {
    ctx.out << file.dump() << '\n';
  } else {
    write_json(args.out_path, file);
    emit(ctx, {{"record", "state"}, {"kind", args.kind}, {"rows", m.rows()}, {"path", args.out_path}},
         "wrote " + args.kind + " state (" + std::to_string(m.rows()) + " x " +
             std::to_string(m.cols()) + ") to " + args.out_path);
  }
  return kOk;
}

int cmd_decompose(const Context& ctx, const DecomposeArgs& args) {
  const DensityMatrix rho = load_state(ctx, args.in_path);
  if (args.bipartite) {
    const auto dec = decompose_bipartite(rho, args.family);
    if (!args.out_path.empty()) write_json(args.out_path, bipartite_to_json(dec));
    const auto basis = shared_basis(dec.family, dec.dim);
    const auto elements = basis->traceless_elements();
    auto label = [&](std::size_t i) { return to_string(elements[i].label); };
    emit(ctx,
         {{"record", "bipartite"},
          {"family", to_string(dec.family)},
          {"dim", dec.dim},
          {"identity", {dec.identity.real(), dec.identity.imag()}}},
         std::string(to_string(dec.family)) + " bipartite decomposition, d = " +
             std::to_string(dec.dim) + ", identity coefficient " + num(dec.identity));
    auto list = [&](const char* kind, std::size_t i, std::size_t j, Complex z, bool pair) {
      if (std::abs(z) <= ctx.tol) return;
      json rec = {{"record", "coefficient"}, {"term", kind}, {"i", label(i)}, {"re", z.real()}, {"im", z.imag()}};
      std::string name = std::string(kind) + "[" + label(i);
      if (pair) {
        rec["j"] = label(j);
        name += "; " + label(j);
      }
      emit(ctx, rec, "  " + name + "] = " + num(z));
    };
    for (std::size_t i = 0; i < dec.size(); ++i) list("n", i, 0, dec.n_coeffs[i], false);
    for (std::size_t i = 0; i < dec.size(); ++i) list("m", i, 0, dec.m_coeffs[i], false);
    for (std::size_t i = 0; i < dec.size(); ++i)
      for (std::size_t j = 0; j < dec.size(); ++j) list("c", i, j, dec.c(i, j), true);
    return kOk;
  }

  const auto b = decompose(rho, args.family);
  if (!args.out_path.empty()) write_json(args.out_path, bloch_to_json(b));
  const double r = radius(b);
  const double bound = radius_bound(b.family, b.dim);
  emit(ctx,
       {{"record", "bloch"},
        {"family", to_string(b.family)},
        {"dim", b.dim},
        {"radius", r},
        {"bound", bound},
        {"purity", purity(rho)}},
       std::string(to_string(b.family)) + " Bloch vector, d = " + std::to_string(b.dim) +
           ": radius " + num(r) + " (bound " + num(bound) + ")");
  if (args.out_path.empty()) {
    const json file = bloch_to_json(b);
    for (const auto& c : file["components"])
      emit(ctx, {{"record", "component"}, {"label", c["label"]}, {"re", c["re"]}, {"im", c["im"]}},
           "  " + c["label"].get<std::string>() + "  " +
               num(Complex(c["re"].get<double>(), c["im"].get<double>())));
  }
  return kOk;
}

int cmd_reconstruct(const Context& ctx, const ReconstructArgs& args) {
  const auto b = read_bloch_file(args.in_path);
  const auto r = reconstruct(b, ctx.tol);
  const json meta = {{"family", to_string(b.family)},
                     {"positive", r.positive},
                     {"min_eigenvalue", r.min_eigenvalue}};
  if (!args.out_path.empty()) write_json(args.out_path, matrix_to_json(r.matrix, meta));
  emit(ctx,
       {{"record", "reconstruct"},
        {"dim", b.dim},
        {"positive", r.positive},
        {"min_eigenvalue", r.min_eigenvalue}},
       "reconstructed " + std::to_string(b.dim) + " x " + std::to_string(b.dim) +
           " operator, min eigenvalue " + num(r.min_eigenvalue) +
           (r.positive ? " (valid state)" : " (not positive semidefinite: not a state)"));
  if (args.out_path.empty()) ctx.out << matrix_to_json(r.matrix, meta).dump() << '\n';
  return kOk;
}

int cmd_witness(const Context& ctx, const WitnessArgs& args) {
  const auto seed = args.seed;
  if (args.mode == "iso") {
    const int d = args.dim;
    const double lo = 1.0 / (d + 1.0);
    if (!(args.alpha >= lo && args.alpha <= 1.0)) {
      std::ostringstream msg;
      msg << "alpha = " << args.alpha
          << (args.alpha < lo ? " is below 1/(d+1) = " : " is outside the entangled range; 1/(d+1) = ")
          << num(lo) << " for d = " << d << "; the entangled range is [" << num(lo) << ", 1]";
      throw InvalidArgument(msg.str());
    }
    const auto target = isotropic({d, args.alpha});
    const auto w = optimal_witness_iso(d, args.family);
    const double D = hs_measure_iso(d, args.alpha);
    const double value = eval_witness(w, target);
    const double B = -value;
    emit(ctx,
         {{"record", "witness_iso"},
          {"dim", d},
          {"alpha", args.alpha},
          {"family", to_string(args.family)},
          {"D", D},
          {"B", B},
          {"value_on_target", value}},
         "isotropic state d = " + std::to_string(d) + ", alpha = " + num(args.alpha) +
             " (witness assembled in " + std::string(to_string(args.family)) + ")\n" +
             "D (HS distance to rho_0) = " + num(D) + "\n" +
             "B (maximal violation)    = " + num(B) + "\n" +
             "<A_opt> on target        = " + num(value));
    emit_verdict(ctx, verify_witness(w, d, args.samples, seed, target));
    if (d == 3) {
      emit(ctx, {{"record", "spin1_header"}}, "spin-1 expectation terms on the target:");
      emit_spin1_rows(ctx, target);
    }
    return kOk;
  }

  const DensityMatrix guess = load_state(ctx, args.guess_path);
  const DensityMatrix target = load_state(ctx, args.target_path);
  const auto w = guess_witness(guess, target);
  const auto verdict = verify_witness(w, w.dim, args.samples, seed, target);
  const bool accepted = verdict.nonnegative_on_samples();
  emit(ctx,
       {{"record", "witness_guess"},
        {"dim", w.dim},
        {"direction_norm", w.direction_norm},
        {"value_on_target", *verdict.value_on_target},
        {"guess", accepted ? "accepted" : "rejected"}},
       "guess witness for d = " + std::to_string(w.dim) + ", ||guess - target|| = " +
           num(w.direction_norm) + "\n<C> on target = " + num(*verdict.value_on_target));
  emit_verdict(ctx, verdict);
  emit(ctx, {{"record", "guess_verdict"}, {"accepted", accepted}},
       accepted ? "verdict: guess accepted (C is nonnegative on all sampled product states)"
                : "verdict: guess rejected (C is negative on a product state)");
  if (w.dim == 3) {
    emit(ctx, {{"record", "spin1_header"}}, "spin-1 expectation terms on the target:");
    emit_spin1_rows(ctx, target);
  }
  return kOk;
}

int cmd_spin1_report(const Context& ctx, const Spin1Args& args) {
  const DensityMatrix rho = load_state(ctx, args.in_path);
  emit(ctx, {{"record", "spin1_header"}}, "spin-1 expectation terms:");
  emit_spin1_rows(ctx, rho);
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qudit Bloch vectors, operator bases and entanglement witnesses", "qudit-bloch"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  double tol = 1e-9;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();
  app.add_option("--tol", tol, "Validation tolerance")->check(CLI::PositiveNumber)->capture_default_str();

  // Family names are checked here and converted once parsing succeeded.
  std::map<BasisFamily*, std::string> family_text;
  auto family_option = [&](CLI::App* sub, BasisFamily& target, bool required) {
    auto* opt = sub->add_option("--family", family_text[&target], "ggm, pob or wob")
                    ->check(CLI::IsMember({"ggm", "ggb", "pob", "wob"}, CLI::ignore_case));
    if (required) opt->required();
  };
  auto dim_option = [](CLI::App* sub, int& target) {
    sub->add_option("--dim", target, "Local dimension d")->required()->check(CLI::Range(2, 32));
  };

  BasisArgs basis_args;
  auto* basis = app.add_subcommand("basis", "Generate an operator basis and verify its Gram matrix");
  family_option(basis, basis_args.family, true);
  dim_option(basis, basis_args.dim);
  basis->add_option("--out", basis_args.out_path, "Write the basis archive here");

  StateArgs state_args;
  auto* state = app.add_subcommand("state", "Write a reference state as a MatrixFile");
  state->add_option("kind", state_args.kind, "bell, iso, mixed, random or pure")
      ->required()
      ->check(CLI::IsMember({"bell", "iso", "mixed", "random", "pure"}));
  dim_option(state, state_args.dim);
  state->add_option("--alpha", state_args.alpha, "Isotropic mixing parameter");
  state->add_option("--seed", state_args.seed, "Seed for random states");
  state->add_flag("--bipartite", state_args.bipartite, "mixed/random/pure on C^d (x) C^d");
  state->add_option("--out", state_args.out_path, "Output path (stdout if omitted)");

  DecomposeArgs decompose_args;
  auto* dec = app.add_subcommand("decompose", "Bloch decomposition of a density matrix");
  dec->add_option("--in", decompose_args.in_path, "MatrixFile")->required();
  family_option(dec, decompose_args.family, true);
  dec->add_flag("--bipartite", decompose_args.bipartite, "Two-qudit decomposition");
  dec->add_option("--out", decompose_args.out_path, "Write the BlochFile here");

  ReconstructArgs reconstruct_args;
  auto* rec = app.add_subcommand("reconstruct", "Density matrix from a BlochFile");
  rec->add_option("--in", reconstruct_args.in_path, "BlochFile")->required();
  rec->add_option("--out", reconstruct_args.out_path, "Write the MatrixFile here");

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "Entanglement witnesses");
  witness->require_subcommand(1);
  witness->fallthrough();
  witness->add_option("--samples", witness_args.samples, "Product states sampled")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  witness->add_option("--seed", witness_args.seed, "Sampling seed")->capture_default_str();
  auto* iso = witness->add_subcommand("iso", "Optimal witness for the isotropic state");
  dim_option(iso, witness_args.dim);
  iso->add_option("--alpha", witness_args.alpha, "Mixing parameter")->required();
  family_option(iso, witness_args.family, false);
  auto* guess = witness->add_subcommand("guess", "Test a guessed nearest separable state");
  guess->add_option("--guess", witness_args.guess_path, "MatrixFile of the guess")->required();
  guess->add_option("--target", witness_args.target_path, "MatrixFile of the entangled state")
      ->required();

  Spin1Args spin1_args;
  auto* spin1 = app.add_subcommand("spin1-report", "Spin-1 expectation terms of a two-qutrit state");
  spin1->add_option("--in", spin1_args.in_path, "MatrixFile (9 x 9)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  for (auto& [target, text] : family_text)
    if (!text.empty()) *target = parse_family(text);

  const Context ctx{out, format == "json-lines" ? OutputFormat::JsonLines : OutputFormat::Text, tol};
  try {
    if (*basis) return cmd_basis(ctx, basis_args);
    if (*state) return cmd_state(ctx, state_args);
    if (*dec) return cmd_decompose(ctx, decompose_args);
    if (*rec) return cmd_reconstruct(ctx, reconstruct_args);
    if (*witness) {
      witness_args.mode = *iso ? "iso" : "guess";
      return cmd_witness(ctx, witness_args);
    }
    if (*spin1) return cmd_spin1_report(ctx, spin1_args);
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}

}  // namespace qudit::cli

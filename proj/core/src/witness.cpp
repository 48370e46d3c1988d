#include "qudit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qudit/errors.hpp"
#include "qudit/states.hpp"

namespace qudit {

namespace {

void require_dimension(int d, const char* what) {
  if (d < 2) throw InvalidArgument(std::string(what) + ": dimension must be >= 2, got " +
                                   std::to_string(d));
}

void require_entangled(int d, double alpha, const char* what) {
  require_dimension(d, what);
  const double lo = 1.0 / (d + 1.0);
  constexpr double slack = 1e-14;
  if (!(alpha >= lo - slack && alpha <= 1.0 + slack)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << what << ": alpha = " << alpha << " outside the entangled range [1/(d+1), 1] = ["
        << lo << ", 1] for d = " << d;
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

EntanglementWitness::EntanglementWitness(Matrix op_, int dim_,
                                         std::optional<BasisFamily> family_used_,
                                         double direction_norm_)
    : op(std::move(op_)), dim(dim_), family_used(family_used_), direction_norm(direction_norm_) {
  if (dim < 2 || op.rows() != static_cast<std::size_t>(dim * dim) || !op.is_square())
    throw DimensionError("witness operator must be d^2 x d^2 for d >= 2");
  if (const double defect = hermiticity_defect(op); defect > kWitnessThreshold) {
    std::ostringstream msg;
    msg << "witness operator is not Hermitian (defect " << defect << ")";
    throw ValidationError(msg.str());
  }
}

DensityMatrix nearest_separable_iso(int d) {
  require_dimension(d, "nearest_separable_iso");
  return isotropic({d, 1.0 / (d + 1.0)});
}

double hs_measure_iso(int d, double alpha) {
  require_entangled(d, alpha, "hs_measure_iso");
  return std::sqrt(d * d - 1.0) / d * (alpha - 1.0 / (d + 1.0));
}

EntanglementWitness optimal_witness_iso(int d, BasisFamily family) {
  require_dimension(d, "optimal_witness_iso");
  const double root = std::sqrt(d * d - 1.0);
  Matrix correlation;
  double scale = 0.0;
  switch (family) {
    case BasisFamily::GGM:
      correlation = lambda_operator(d);
      scale = 1.0 / (2.0 * root);
      break;
    case BasisFamily::POB:
      correlation = t_operator(d);
      scale = 1.0 / root;
      break;
    case BasisFamily::WOB:
      correlation = u_operator(d);
      scale = 1.0 / (d * root);
      break;
  }
  const auto n = static_cast<std::size_t>(d * d);
  const double id_coeff = std::sqrt((d - 1.0) / (d + 1.0)) / d;
  return EntanglementWitness(id_coeff * Matrix::identity(n) - scale * correlation, d, family,
                             hs_measure_iso(d, 1.0));
}

EntanglementWitness guess_witness(const DensityMatrix& rho_guess, const DensityMatrix& rho_ent) {
  if (rho_guess.dim() != rho_ent.dim())
    throw DimensionError("guess_witness: states have different dimensions");
  const int d = exact_sqrt(static_cast<std::size_t>(rho_guess.dim()));
  if (d < 2) throw DimensionError("guess_witness: states must act on C^d (x) C^d");
  const Matrix direction = rho_guess.matrix() - rho_ent.matrix();
  const double norm = hs_norm(direction);
  if (norm <= 1e-12)
    throw InvalidArgument("guess_witness: guess coincides with the entangled state");
  const Complex shift = hs_inner(rho_guess.matrix(), direction);
  const Matrix op =
      (direction - shift * Matrix::identity(static_cast<std::size_t>(rho_guess.dim()))) / norm;
  return EntanglementWitness(op, d, std::nullopt, norm);
}

double eval_witness(const EntanglementWitness& w, const DensityMatrix& rho) {
  if (w.op.rows() != static_cast<std::size_t>(rho.dim()))
    throw DimensionError("eval_witness: witness and state dimensions differ");
  const Complex value = hs_inner(w.op, rho.matrix());
  if (std::abs(value.imag()) > kWitnessThreshold) {
    std::ostringstream msg;
    msg << "eval_witness: expectation has imaginary part " << value.imag();
    throw ValidationError(msg.str());
  }
  return value.real();
}

WitnessVerdict verify_witness(const EntanglementWitness& w, int d, int n_samples,
                              std::uint64_t seed, const std::optional<DensityMatrix>& target) {
  if (n_samples < 1) throw InvalidArgument("verify_witness: n_samples must be >= 1");
  if (d != w.dim) throw InvalidArgument("verify_witness: d differs from the witness dimension");
  WitnessVerdict verdict;
  verdict.n_samples = n_samples;
  verdict.min_sep_expectation = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_samples; ++i) {
    const auto v = random_product_vector(d, derive_seed(seed, static_cast<std::uint64_t>(i)));
    verdict.min_sep_expectation =
        std::min(verdict.min_sep_expectation, expectation(w.op, v).real());
  }
  if (target) verdict.value_on_target = eval_witness(w, *target);
  verdict.detected = verdict.value_on_target && *verdict.value_on_target < -kWitnessThreshold &&
                     verdict.nonnegative_on_samples();
  return verdict;
}

double max_violation_iso(int d, double alpha) {
  require_entangled(d, alpha, "max_violation_iso");
  return -eval_witness(optimal_witness_iso(d), isotropic({d, alpha}));
}

}  // namespace qudit

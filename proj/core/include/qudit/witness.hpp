#pragma once

#include <cstdint>
#include <optional>

#include "qudit/bases.hpp"
#include "qudit/bloch.hpp"
#include "qudit/linalg.hpp"

namespace qudit {

/// Threshold below which an expectation value counts as negative.
inline constexpr double kWitnessThreshold = 1e-9;

/// Hermitian operator on C^d (x) C^d intended as an entanglement witness.
struct EntanglementWitness {
  /// Throws ValidationError if `op` is not Hermitian within 1e-9 and
  /// DimensionError if it is not d^2 x d^2.
  EntanglementWitness(Matrix op, int dim, std::optional<BasisFamily> family_used,
                      double direction_norm);

  Matrix op;
  /// Local dimension d.
  int dim;
  /// Basis the closed form was assembled in; empty for guess witnesses.
  std::optional<BasisFamily> family_used;
  /// ||rho_guess - rho_ent|| for the state pair the witness was built from.
  double direction_norm;
};

struct WitnessVerdict {
  double min_sep_expectation = 0.0;
  int n_samples = 0;
  std::optional<double> value_on_target;
  /// value_on_target < -1e-9 and min_sep_expectation >= -1e-9.
  bool detected = false;

  /// No sampled product state gave a negative expectation.
  bool nonnegative_on_samples() const noexcept {
    return min_sep_expectation >= -kWitnessThreshold;
  }
};

/// rho_0 = isotropic(d, 1/(d+1)).
DensityMatrix nearest_separable_iso(int d);

/// D = (sqrt(d^2-1)/d)(alpha - 1/(d+1)) for alpha in [1/(d+1), 1]; throws
/// InvalidArgument naming the interval otherwise.
double hs_measure_iso(int d, double alpha);

/// (1/d) sqrt((d-1)/(d+1)) 1 - X, where X is Lambda/(2 sqrt(d^2-1)) (GGM),
/// T/sqrt(d^2-1) (POB) or U/(d sqrt(d^2-1)) (WOB).
EntanglementWitness optimal_witness_iso(int d, BasisFamily family = BasisFamily::GGM);

/// (rho_guess - rho_ent - <rho_guess, rho_guess - rho_ent> 1) / ||rho_guess - rho_ent||.
///
/// Both states must be d^2 x d^2. Throws InvalidArgument when the two states
/// coincide (within 1e-12 in HS norm).
EntanglementWitness guess_witness(const DensityMatrix& rho_guess, const DensityMatrix& rho_ent);

/// Re Tr(W rho). Throws DimensionError on mismatch and ValidationError if the
/// imaginary part exceeds 1e-9.
double eval_witness(const EntanglementWitness& w, const DensityMatrix& rho);

/// Minimum of <v|W|v> over n_samples random product vectors.
///
/// Sample i uses the stream derive_seed(seed, i), so the result does not
/// depend on evaluation order. Throws InvalidArgument if n_samples < 1 or d
/// differs from w.dim.
WitnessVerdict verify_witness(const EntanglementWitness& w, int d, int n_samples,
                              std::uint64_t seed,
                              const std::optional<DensityMatrix>& target = std::nullopt);

/// -eval_witness(optimal_witness_iso(d), isotropic(d, alpha)); same domain as
/// hs_measure_iso.
double max_violation_iso(int d, double alpha);

}  // namespace qudit

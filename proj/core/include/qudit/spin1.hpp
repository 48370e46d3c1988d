#pragma once

#include <string>
#include <vector>

#include "qudit/bases.hpp"
#include "qudit/bloch.hpp"
#include "qudit/linalg.hpp"
#include "qudit/witness.hpp"

namespace qudit {

/// Spin-1 observables in the |+1>, |0>, |-1> basis, with hbar = 1.
struct SpinOperatorSet {
  Matrix sx, sy, sz;
  Matrix sx2, sy2;
  /// Anticommutators {Sx,Sy}, {Sy,Sz}, {Sz,Sx}.
  Matrix axy, ayz, azx;
  double hbar = 1.0;
};

const SpinOperatorSet& spin_operators();

/// The qutrit Gell-Mann matrix for `label`, assembled from spin-1 operators.
/// Throws InvalidArgument for labels that are not d = 3 GGM labels.
Matrix gellmann_from_spin(const BasisElementLabel& label);

/// (1/(3 sqrt 2)) (1 (x) 1 - (3/4) Lambda).
EntanglementWitness a_iso_qutrit();

struct ExpectationTerm {
  /// ASCII observable name, e.g. "Sx*Sx", "1*Sx^2", "{Sz,Sx}*{Sz,Sx}".
  std::string name;
  /// Weight of the term in <Lambda>.
  double coefficient;
  double value;
};

/// Per-observable expectation values of a two-qutrit state and the witness
/// values they assemble into.
struct ExpectationReport {
  std::vector<ExpectationTerm> terms;
  /// sum of coefficient * value.
  double lambda_assembled = 0.0;
  /// Tr(Lambda rho) computed from the matrix directly.
  double lambda_direct = 0.0;
  /// (1/(3 sqrt 2)) <1> - (1/(4 sqrt 2)) <Lambda>.
  double a_iso = 0.0;
  double hbar = 1.0;
};

/// Throws DimensionError unless rho is 9 x 9.
ExpectationReport witness_expectation_terms(const DensityMatrix& rho);

}  // namespace qudit

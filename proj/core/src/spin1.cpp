#include "qudit/spin1.hpp"

#include <cmath>
#include <numbers>

#include "qudit/errors.hpp"
#include "qudit/states.hpp"

namespace qudit {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Complex I(0.0, 1.0);

SpinOperatorSet make_spin_operators() {
  SpinOperatorSet s;
  s.sx = kInvSqrt2 * Matrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  s.sy = kInvSqrt2 * Matrix{{0, -I, 0}, {I, 0, -I}, {0, I, 0}};
  s.sz = Matrix::diagonal({1, 0, -1});
  s.sx2 = 0.5 * Matrix{{1, 0, 1}, {0, 2, 0}, {1, 0, 1}};
  s.sy2 = 0.5 * Matrix{{1, 0, -1}, {0, 2, 0}, {-1, 0, 1}};
  s.axy = Matrix{{0, 0, -I}, {0, 0, 0}, {I, 0, 0}};
  s.ayz = kInvSqrt2 * Matrix{{0, -I, 0}, {I, 0, I}, {0, -I, 0}};
  s.azx = kInvSqrt2 * Matrix{{0, 1, 0}, {1, 0, -1}, {0, -1, 0}};
  return s;
}

}  // namespace

const SpinOperatorSet& spin_operators() {
  static const SpinOperatorSet set = make_spin_operators();
  return set;
}

Matrix gellmann_from_spin(const BasisElementLabel& label) {
  const auto* ggm = std::get_if<GgmLabel>(&label);
  if (ggm == nullptr) throw InvalidArgument("gellmann_from_spin: not a Gell-Mann label");
  const auto& s = spin_operators();
  const Matrix id = Matrix::identity(3);
  using Kind = GgmLabel::Kind;
  const int jk = ggm->j * 10 + ggm->k;
  switch (ggm->kind) {
    case Kind::Symmetric:
      if (jk == 12) return kInvSqrt2 * (s.sx + s.azx);
      if (jk == 13) return s.sx2 - s.sy2;
      if (jk == 23) return kInvSqrt2 * (s.sx - s.azx);
      break;
    case Kind::Antisymmetric:
      if (jk == 12) return kInvSqrt2 * (s.sy + s.ayz);
      if (jk == 13) return s.axy;
      if (jk == 23) return kInvSqrt2 * (s.sy - s.ayz);
      break;
    case Kind::Diagonal:
      if (ggm->l() == 1) return 2.0 * id + 0.5 * (s.sz - 3.0 * s.sx2 - 3.0 * s.sy2);
      if (ggm->l() == 2)
        return (1.0 / std::sqrt(3.0)) * (-2.0 * id + 1.5 * (s.sz + s.sx2 + s.sy2));
      break;
  }
  throw InvalidArgument("gellmann_from_spin: " + to_string(label) + " is not a qutrit label");
}

EntanglementWitness a_iso_qutrit() {
  const Matrix op = (1.0 / (3.0 * std::numbers::sqrt2)) *
                    (Matrix::identity(9) - 0.75 * lambda_operator(3));
  return EntanglementWitness(op, 3, BasisFamily::GGM, hs_measure_iso(3, 1.0));
}

ExpectationReport witness_expectation_terms(const DensityMatrix& rho) {
  if (rho.dim() != 9)
    throw DimensionError("witness_expectation_terms: expected a 9 x 9 two-qutrit state, got " +
                         std::to_string(rho.dim()) + " x " + std::to_string(rho.dim()));
  const auto& s = spin_operators();
  const Matrix id = Matrix::identity(3);
  const Matrix& m = rho.matrix();

  struct Spec {
    const char* name;
    double coefficient;
    const Matrix* a;
    const Matrix* b;
  };
  const Spec specs[] = {
      {"Sx*Sx", 1.0, &s.sx, &s.sx},
      {"Sy*Sy", -1.0, &s.sy, &s.sy},
      {"Sz*Sz", 1.0, &s.sz, &s.sz},
      {"1*1", 16.0 / 3.0, &id, &id},
      {"1*Sx^2", -4.0, &id, &s.sx2},
      {"1*Sy^2", -4.0, &id, &s.sy2},
      {"Sx^2*1", -4.0, &s.sx2, &id},
      {"Sy^2*1", -4.0, &s.sy2, &id},
      {"Sx^2*Sx^2", 4.0, &s.sx2, &s.sx2},
      {"Sy^2*Sy^2", 4.0, &s.sy2, &s.sy2},
      {"Sx^2*Sy^2", 2.0, &s.sx2, &s.sy2},
      {"Sy^2*Sx^2", 2.0, &s.sy2, &s.sx2},
      {"{Sz,Sx}*{Sz,Sx}", 1.0, &s.azx, &s.azx},
      {"{Sy,Sz}*{Sy,Sz}", -1.0, &s.ayz, &s.ayz},
      {"{Sx,Sy}*{Sx,Sy}", -1.0, &s.axy, &s.axy},
  };

  ExpectationReport report;
  report.hbar = s.hbar;
  for (const auto& spec : specs) {
    // Every observable is Hermitian, so Tr((A (x) B)^dagger rho) = <A (x) B>.
    const double value = hs_inner_kron(*spec.a, *spec.b, m).real();
    report.terms.push_back({spec.name, spec.coefficient, value});
    report.lambda_assembled += spec.coefficient * value;
  }
  report.lambda_direct = hs_inner(lambda_operator(3), m).real();
  const double norm = m.trace().real();
  report.a_iso = norm / (3.0 * std::numbers::sqrt2) -
                 report.lambda_assembled / (4.0 * std::numbers::sqrt2);
  return report;
}

}  // namespace qudit

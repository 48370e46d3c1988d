#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qudit/bloch.hpp"
#include "qudit/linalg.hpp"

namespace qudit {

/// alpha |phi+><phi+| + (1 - alpha) 1 / d^2 on C^d (x) C^d.
struct IsotropicParams {
  int dim = 2;
  double alpha = 0.0;
};

/// Smallest alpha for which the isotropic state is positive, -1/(d^2 - 1).
double isotropic_alpha_min(int d);

/// |phi+><phi+| with |phi+> = d^{-1/2} sum_j |j>|j>.
DensityMatrix bell_state(int d);

/// Throws InvalidArgument (naming the admissible interval) when alpha is
/// outside [-1/(d^2-1), 1].
DensityMatrix isotropic(const IsotropicParams& p);

/// sum Ls(x)Ls - sum La(x)La + sum Lm(x)Lm over the GGM basis.
Matrix lambda_operator(int d);
/// sum over (L, M) != (0, 0) of T_LM (x) T_LM.
Matrix t_operator(int d);
/// sum over (l, m) != (0, 0) of U_lm (x) U_{-l mod d, m}.
Matrix u_operator(int d);

/// Standard complex Gaussians from a documented, platform-independent stream.
///
/// The engine is std::mt19937_64 seeded with `seed`. Each uniform is the top
/// 53 bits of one engine output scaled to [0, 1); each complex sample
/// consumes two uniforms u1, u2 and returns
/// sqrt(-2 ln(1 - u1)) * (cos(2 pi u2) + i sin(2 pi u2)) / sqrt(2).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  Complex next();
  std::vector<Complex> vector(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser applied to seed and index; used to give every sample
/// of a batch its own independent stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Normalised vector of d independent complex Gaussians.
std::vector<Complex> random_state_vector(int d, std::uint64_t seed);
/// |psi><psi| for random_state_vector(d, seed).
DensityMatrix random_pure_state(int d, std::uint64_t seed);
/// |psi_A> (x) |psi_B>, both drawn in order from one stream.
std::vector<Complex> random_product_vector(int d, std::uint64_t seed);
/// Projector onto random_product_vector(d, seed).
DensityMatrix random_pure_product_state(int d, std::uint64_t seed);
/// G G^dagger / Tr(G G^dagger) for a d x d complex Gaussian G.
DensityMatrix random_density_matrix(int d, std::uint64_t seed);

}  // namespace qudit

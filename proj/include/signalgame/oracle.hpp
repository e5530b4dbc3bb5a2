#pragma once

#include <cstdint>
#include <vector>

#include "signalgame/gaussmat.hpp"
#include "signalgame/scenario.hpp"

// Brute-force verifiers for the closed-form solvers. Nothing here calls into
// the cheaptalk or noisy solution paths.
namespace signalgame::oracle {

inline constexpr int kMaxExhaustiveDim = 12;

/// Posterior covariances sigma_m^{1/2} W diag(t) W^T sigma_m^{1/2} with W a
/// random orthogonal matrix and t uniform in [0, 1]^n. The first two emitted
/// matrices are the vertices O (t = 0) and sigma_m (t = 1) when count allows.
/// Draw i uses substream (seed, i).
std::vector<SymMatrix> sample_feasible_posteriors(const Scenario& scen, std::size_t count,
                                                  std::uint64_t seed);

/// Encoder cost written without the kernel simplification:
///   Tr((A-I)^T (A-I) sigma_u) + Tr(A^T A (sigma_m - sigma_u)) + |b|^2.
double direct_encoder_cost(const Scenario& scen, const SymMatrix& sigma_u);

struct BruteForceResult {
  SymMatrix best_Sigma_u;
  double best_cost = 0.0;
  std::uint32_t best_subset = 0;  ///< bitmask over ascending eigenvectors of B
  double best_subset_cost = 0.0;  ///< best over the 2^n eigen-indicator projections
  double best_sampled_cost = 0.0; ///< best over the random feasible draws
};

/// Minimum of the encoder cost over every eigen-indicator projection of the
/// whitened kernel and `count` random feasible posteriors. Throws TooLarge
/// above kMaxExhaustiveDim.
BruteForceResult brute_force_noiseless(const Scenario& scen, std::size_t count,
                                       std::uint64_t seed);

/// Golden-section minimizer of the scalar lower-bound cost
///   f(P) = (2a-1) sigma_m^2 sigma_w^2 / (sigma_w^2 + P) + rho P
/// on [0, sigma_w sqrt((2a-1) sigma_m^2 / rho) + 10 sigma_w^2].
double golden_section_power(double a, double sigma_m2, double sigma_w2, double rho,
                            double tol = 1e-8);

}  // namespace signalgame::oracle

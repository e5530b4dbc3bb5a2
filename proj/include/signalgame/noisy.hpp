#pragma once

#include "signalgame/regime.hpp"
#include "signalgame/scenario.hpp"

namespace signalgame::noisy {

/// Relative band around a threshold that is classified as the boundary
/// itself. Thresholds such as (2a - 1) sigma_m^2 / sigma_w^2 rarely land on
/// the exact double that a user-typed rho represents, so a price within this
/// band counts as "equal" and the non-informative side wins.
inline constexpr double kBoundaryRelTol = 1e-12;

/// Entrywise tolerance for recognizing A = a I.
inline constexpr double kIsotropyTolerance = 1e-12;
/// Tolerance for recognizing sigma_m and sigma_w as multiples of I.
inline constexpr double kCertifyTolerance = 1e-10;

/// Optimal transmission power and the lower-bound encoder cost it attains.
struct PowerSolution {
  Regime regime = Regime::NonInformative;  ///< NonInformative or Informative
  double P_star = 0.0;
  double rho_threshold = 0.0;
  double fP_star = 0.0;  ///< lower-bound encoder cost at P_star, constants included
  double alpha = 0.0;    ///< gain of the linear encoder x = alpha * m
  /// The lower bound is achieved (scalar game or i.i.d. source and noise);
  /// otherwise the result only indicates a signaling potential.
  bool certified = false;
};

/// True when rho is strictly below the threshold, outside the boundary band.
bool below_threshold(double rho, double threshold);

/// Scalar noisy game. Throws InvalidScenario for nonpositive variances or
/// negative rho and NotSignaling for rho == 0.
PowerSolution scalar_power(double a, double b, double sigma_m2, double sigma_w2, double rho);

/// (2a-1) sigma_m^2 sigma_w^2 / (sigma_w^2 + P) + rho P + (a-1)^2 sigma_m^2 + b^2.
double lower_bound_cost(double a, double b, double sigma_m2, double sigma_w2, double rho,
                        double P);

/// (2a-1) n^2 |sigma_m|^{1/n} |sigma_w|^{1/n} / Tr(sigma_w)^2 for A = a I,
/// 0 when a <= 1/2. Throws NotIsotropic when A is not a multiple of I.
double multidim_threshold(const Scenario& scen);

/// Minimizer of the isotropic lower bound
///   f(P) = (1-2a)[Tr(sigma_m) - kappa/(P + tau)] + rho P + const
/// with kappa = n^2 |sigma_m|^{1/n} |sigma_w|^{1/n} and tau = Tr(sigma_w).
PowerSolution optimize_bound_power(const Scenario& scen);

}  // namespace signalgame::noisy

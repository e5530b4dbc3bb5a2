#include "signalgame/noisy.hpp"

#include <cmath>
#include <string>

namespace signalgame::noisy {

namespace {

void require_signaling(double rho) {
  if (!std::isfinite(rho) || rho < 0.0) {
    throw Error(ErrorKind::InvalidScenario, "rho must be finite and >= 0");
  }
  if (rho == 0.0) {
    throw Error(ErrorKind::NotSignaling,
                "rho = 0 is the cheap-talk regime; use the noiseless solver");
  }
}

double isotropic_gain(const Scenario& scen) {
  if (!is_isotropic(scen.A, kIsotropyTolerance)) {
    throw Error(ErrorKind::NotIsotropic,
                "the multidimensional noisy analysis requires A = a I");
  }
  return scen.A(0, 0);
}

}  // namespace

bool below_threshold(double rho, double threshold) {
  return threshold > 0.0 && rho < threshold * (1.0 - kBoundaryRelTol);
}

PowerSolution scalar_power(double a, double b, double sigma_m2, double sigma_w2, double rho) {
  if (!(sigma_m2 > 0.0) || !(sigma_w2 > 0.0) || !std::isfinite(sigma_m2) ||
      !std::isfinite(sigma_w2)) {
    throw Error(ErrorKind::InvalidScenario, "variances must be positive and finite");
  }
  require_signaling(rho);

  PowerSolution sol;
  sol.certified = true;
  if (a > 0.5) {
    sol.rho_threshold = (2.0 * a - 1.0) * sigma_m2 / sigma_w2;
    if (below_threshold(rho, sol.rho_threshold)) {
      // sigma_w sqrt((2a-1) sigma_m^2 / rho) - sigma_w^2, factored so that
      // P* > 0 whenever rho is below the boundary band
      sol.P_star = sigma_w2 * (std::sqrt(sol.rho_threshold / rho) - 1.0);
      sol.regime = Regime::Informative;
    }
  }
  sol.fP_star = lower_bound_cost(a, b, sigma_m2, sigma_w2, rho, sol.P_star);
  sol.alpha = std::sqrt(sol.P_star / sigma_m2);
  return sol;
}

double lower_bound_cost(double a, double b, double sigma_m2, double sigma_w2, double rho,
                        double P) {
  if (!(P >= 0.0)) throw Error(ErrorKind::InvalidPower, "power must be >= 0");
  const double f = (2.0 * a - 1.0) * sigma_m2 * sigma_w2 / (sigma_w2 + P) + rho * P;
  return f + (a - 1.0) * (a - 1.0) * sigma_m2 + b * b;
}

double multidim_threshold(const Scenario& scen) {
  const double a = isotropic_gain(scen);
  if (a <= 0.5) return 0.0;
  require_pd(scen.sigma_m, "source covariance");
  require_pd(scen.sigma_w, "channel covariance");
  const double n = static_cast<double>(scen.dim());
  const double kappa = n * n * det_root(scen.sigma_m) * det_root(scen.sigma_w);
  const double tau = scen.sigma_w.trace();
  return (2.0 * a - 1.0) * kappa / (tau * tau);
}

PowerSolution optimize_bound_power(const Scenario& scen) {
  const double a = isotropic_gain(scen);
  require_signaling(scen.rho);
  require_pd(scen.sigma_m, "source covariance");
  require_pd(scen.sigma_w, "channel covariance");

  const double n = static_cast<double>(scen.dim());
  const double tr_m = scen.sigma_m.trace();
  const double kappa = n * n * det_root(scen.sigma_m) * det_root(scen.sigma_w);
  const double tau = scen.sigma_w.trace();
  const double constant = a * a * tr_m + scen.b.squaredNorm();

  PowerSolution sol;
  sol.certified = is_isotropic(scen.sigma_m.mat(), kCertifyTolerance) &&
                  is_isotropic(scen.sigma_w.mat(), kCertifyTolerance);
  if (a > 0.5) {
    sol.rho_threshold = (2.0 * a - 1.0) * kappa / (tau * tau);
    if (below_threshold(scen.rho, sol.rho_threshold)) {
      // sqrt((2a-1) kappa / rho) - tau
      sol.P_star = tau * (std::sqrt(sol.rho_threshold / scen.rho) - 1.0);
      sol.regime = Regime::Informative;
    }
    sol.fP_star = (1.0 - 2.0 * a) * (tr_m - kappa / (sol.P_star + tau)) +
                  scen.rho * sol.P_star + constant;
  } else {
    // Babbling is the unique equilibrium; its cost is the constant term.
    sol.fP_star = constant;
  }
  sol.alpha = std::sqrt(sol.P_star / tr_m);
  return sol;
}

}  // namespace signalgame::noisy

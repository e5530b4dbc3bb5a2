#include "signalgame/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace signalgame::channel {

namespace {

double allocated(const Vector& lambda, double nu) {
  return (nu - lambda.array()).max(0.0).sum();
}

}  // namespace

WaterFillResult waterfill_eigs(std::span<const double> noise_eigs, double P) {
  if (noise_eigs.empty()) throw Error(ErrorKind::DimError, "waterfill: no noise eigenvalues");
  if (!std::isfinite(P) || P < 0.0) {
    throw Error(ErrorKind::InvalidPower, "waterfill: power must be finite and >= 0");
  }
  std::vector<double> sorted(noise_eigs.begin(), noise_eigs.end());
  std::sort(sorted.begin(), sorted.end());
  if (!(sorted.front() > kPsdTolerance) || !std::isfinite(sorted.back())) {
    throw Error(ErrorKind::NotPD, "waterfill: noise eigenvalues must be positive, got min " +
                                      std::to_string(sorted.front()));
  }

  WaterFillResult out;
  out.noise_eigs = Eigen::Map<const Vector>(sorted.data(), static_cast<Eigen::Index>(sorted.size()));
  const Vector& lambda = out.noise_eigs;
  const Eigen::Index n = lambda.size();

  if (P == 0.0) {
    out.nu = lambda(0);
    out.powers = Vector::Zero(n);
    out.capacity_bits = 0.0;
    return out;
  }

  // Allocated power is continuous, piecewise linear and increasing in nu.
  double lo = lambda(0);
  double hi = lambda(0) + P;
  const double budget_tol = 1e-12 * std::max(P, 1.0);
  double nu = 0.5 * (lo + hi);
  for (int it = 0; it < kWaterFillMaxIterations; ++it) {
    nu = 0.5 * (lo + hi);
    const double used = allocated(lambda, nu);
    if (std::abs(used - P) <= budget_tol) break;
    if (used < P) {
      lo = nu;
    } else {
      hi = nu;
    }
  }

  // Snap to the exact level on the active set found by bisection.
  double active_sum = 0.0;
  Eigen::Index active = 0;
  for (Eigen::Index i = 0; i < n && lambda(i) < nu; ++i) {
    active_sum += lambda(i);
    ++active;
  }
  if (active > 0) {
    const double exact = (P + active_sum) / static_cast<double>(active);
    if (exact >= lambda(active - 1) && (active == n || exact <= lambda(active))) nu = exact;
  }

  out.nu = nu;
  out.powers = (nu - lambda.array()).max(0.0).matrix();
  out.capacity_bits = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    out.capacity_bits += 0.5 * std::log2(1.0 + out.powers(i) / lambda(i));
  }
  return out;
}

WaterFillResult waterfill(const SymMatrix& sigma_w, double P) {
  const EigenPairs eig = sym_eig(sigma_w);
  return waterfill_eigs(std::span<const double>(eig.values.data(),
                                                static_cast<std::size_t>(eig.values.size())),
                        P);
}

double det_error_floor(const SymMatrix& sigma_m, double capacity_bits) {
  return sigma_m.mat().determinant() * std::exp2(-2.0 * capacity_bits);
}

double capacity_factor_bound(const SymMatrix& sigma_w, double P) {
  const double n = static_cast<double>(sigma_w.dim());
  return det_root(sigma_w) / (P / n + sigma_w.trace() / n);
}

double trace_posterior_bound(const SymMatrix& sigma_m, const SymMatrix& sigma_w, double P) {
  if (sigma_m.dim() != sigma_w.dim()) {
    throw Error(ErrorKind::DimError, "trace_posterior_bound: dimension mismatch");
  }
  const double n = static_cast<double>(sigma_m.dim());
  return sigma_m.trace() -
         n * n * det_root(sigma_m) * det_root(sigma_w) / (P + sigma_w.trace());
}

}  // namespace signalgame::channel

#pragma once

#include <span>

#include "signalgame/gaussmat.hpp"

namespace signalgame::channel {

/// Water-filling allocation over the noise eigenmodes.
struct WaterFillResult {
  double nu = 0.0;            ///< water level
  Vector powers;              ///< max(nu - lambda_i, 0), aligned with noise_eigs
  double capacity_bits = 0.0; ///< sum of 1/2 log2(1 + p_i / lambda_i)
  Vector noise_eigs;          ///< ascending eigenvalues of the noise covariance
};

inline constexpr int kWaterFillMaxIterations = 200;

/// Capacity-achieving allocation of total power P over a channel with noise
/// covariance sigma_w > O. Throws NotPD for a singular sigma_w and
/// InvalidPower for P < 0.
WaterFillResult waterfill(const SymMatrix& sigma_w, double P);

/// Same, given the noise eigenvalues directly (any order, all > 0).
WaterFillResult waterfill_eigs(std::span<const double> noise_eigs, double P);

/// Lower bound |sigma_m| 2^{-2C} on the determinant of the error covariance.
double det_error_floor(const SymMatrix& sigma_m, double capacity_bits);

/// |sigma_w|^{1/n} / (P/n + Tr(sigma_w)/n), a lower bound on 2^{-2C/n}.
double capacity_factor_bound(const SymMatrix& sigma_w, double P);

/// Tr(sigma_m) - n^2 |sigma_m|^{1/n} |sigma_w|^{1/n} / (P + Tr(sigma_w)), an
/// upper bound on Tr(sigma_u) for any encoder of power P.
double trace_posterior_bound(const SymMatrix& sigma_m, const SymMatrix& sigma_w, double P);

}  // namespace signalgame::channel

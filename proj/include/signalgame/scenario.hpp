#pragma once

#include "signalgame/gaussmat.hpp"

namespace signalgame {

/// One instance of the signaling game: source m ~ N(0, sigma_m), encoder
/// target A*m - b, channel noise w ~ N(0, sigma_w), power price rho.
struct Scenario {
  SymMatrix sigma_m;
  Matrix A;
  Vector b;
  SymMatrix sigma_w;
  double rho = 0.0;

  Eigen::Index dim() const { return sigma_m.dim(); }

  /// Noiseless and costless messaging.
  bool is_cheap_talk() const { return sigma_w.is_zero() && rho == 0.0; }

  /// Checks dimensions, sigma_m > O, sigma_w >= O and rho >= 0.
  void validate() const;

  /// Noiseless scenario with zero bias vector.
  static Scenario cheap_talk(const SymMatrix& sigma_m, const Matrix& A);
};

}  // namespace signalgame

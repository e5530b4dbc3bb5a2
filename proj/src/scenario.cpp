#include "signalgame/scenario.hpp"

#include <cmath>
#include <string>

namespace signalgame {

void Scenario::validate() const {
  const Eigen::Index n = sigma_m.dim();
  if (n < 1) throw Error(ErrorKind::DimError, "scenario: empty source covariance");
  if (A.rows() != n || A.cols() != n) {
    throw Error(ErrorKind::DimError, "scenario: A must be " + std::to_string(n) + "x" +
                                         std::to_string(n));
  }
  if (b.size() != n) {
    throw Error(ErrorKind::DimError, "scenario: b must have length " + std::to_string(n));
  }
  if (sigma_w.dim() != n) {
    throw Error(ErrorKind::DimError, "scenario: channel covariance must be " +
                                         std::to_string(n) + "x" + std::to_string(n));
  }
  if (!A.allFinite() || !b.allFinite() || !std::isfinite(rho)) {
    throw Error(ErrorKind::InvalidScenario, "scenario: non-finite entries");
  }
  if (rho < 0.0) throw Error(ErrorKind::InvalidScenario, "scenario: rho must be >= 0");
  require_pd(sigma_m, "source covariance");
  require_psd(sigma_w, "channel covariance");
}

Scenario Scenario::cheap_talk(const SymMatrix& sigma_m, const Matrix& A) {
  const Eigen::Index n = sigma_m.dim();
  return Scenario{sigma_m, A, Vector::Zero(n), SymMatrix::zero(n), 0.0};
}

}  // namespace signalgame

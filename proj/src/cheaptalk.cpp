#include "signalgame/cheaptalk.hpp"

#include <cmath>
#include <string>

namespace signalgame::cheaptalk {

namespace {

double objective_unchecked(const Scenario& scen, const SymMatrix& V,
                           const SymMatrix& sigma_u) {
  const double policy_term = (V.mat() * sigma_u.mat()).trace();
  const double constant = (scen.A.transpose() * scen.A * scen.sigma_m.mat()).trace() +
                          scen.b.squaredNorm();
  return policy_term + constant;
}

}  // namespace

SymMatrix cost_kernel(const Matrix& A) {
  if (A.rows() != A.cols()) {
    throw Error(ErrorKind::DimError, "cost_kernel: A must be square, got " +
                                         std::to_string(A.rows()) + "x" +
                                         std::to_string(A.cols()));
  }
  const Eigen::Index n = A.rows();
  return SymMatrix(Matrix::Identity(n, n) - (A + A.transpose()));
}

SymMatrix mismatch_matrix(const Scenario& scen) {
  require_pd(scen.sigma_m, "source covariance");
  const SymMatrix root = sqrt_psd(scen.sigma_m);
  const SymMatrix V = cost_kernel(scen.A);
  return SymMatrix(root.mat() * V.mat() * root.mat());
}

EquilibriumSolution solve_noiseless(const Scenario& scen) {
  if (!scen.sigma_w.is_zero() || scen.rho != 0.0) {
    throw Error(ErrorKind::NotCheapTalk,
                "solve_noiseless requires a zero channel covariance and rho = 0");
  }
  scen.validate();

  const Eigen::Index n = scen.dim();
  EquilibriumSolution sol;
  sol.V = cost_kernel(scen.A);
  const SymMatrix root = sqrt_psd(scen.sigma_m);
  const SymMatrix inv_root = inv_sqrt_pd(scen.sigma_m);
  sol.B = SymMatrix(root.mat() * sol.V.mat() * root.mat());
  sol.eig = sym_eig(sol.B);

  for (Eigen::Index i = 0; i < n; ++i) {
    const double beta = sol.eig.values(i);
    if (beta < -kZeroEigenvalue) ++sol.k;
    if (std::abs(beta) <= kZeroEigenvalue) sol.degenerate = true;
  }

  const auto Qk = sol.eig.vectors.leftCols(sol.k);
  sol.Pi_star = SymMatrix(Qk * Qk.transpose());
  sol.Sigma_u_star = SymMatrix(root.mat() * sol.Pi_star.mat() * root.mat());

  sol.L = Matrix::Zero(n, n);
  sol.L.topRows(sol.k) = Qk.transpose() * inv_root.mat();

  sol.encoder_cost = objective_unchecked(scen, sol.V, sol.Sigma_u_star);
  sol.decoder_cost = scen.sigma_m.trace() - sol.Sigma_u_star.trace();

  if (sol.k == 0) {
    sol.regime = Regime::NonInformative;
  } else if (sol.k == n) {
    sol.regime = Regime::FullyRevealing;
  } else {
    sol.regime = Regime::PartiallyRevealing;
  }
  return sol;
}

Regime scalar_regime(double a) {
  if (a > 0.5) return Regime::FullyRevealing;
  if (a < 0.5) return Regime::NonInformative;
  return Regime::Indifferent;
}

double encoder_objective(const Scenario& scen, const SymMatrix& sigma_u) {
  if (sigma_u.dim() != scen.dim()) {
    throw Error(ErrorKind::DimError, "encoder_objective: dimension mismatch");
  }
  if (!loewner_geq(sigma_u, SymMatrix::zero(scen.dim()), kFeasibilityTolerance) ||
      !loewner_geq(scen.sigma_m, sigma_u, kFeasibilityTolerance)) {
    throw Error(ErrorKind::Infeasible,
                "posterior covariance outside the interval [O, sigma_m]");
  }
  return objective_unchecked(scen, cost_kernel(scen.A), sigma_u);
}

}  // namespace signalgame::cheaptalk

#pragma once

#include "signalgame/gaussmat.hpp"
#include "signalgame/regime.hpp"
#include "signalgame/scenario.hpp"

namespace signalgame::cheaptalk {

/// |beta| <= kZeroEigenvalue counts as zero and is left out of the revealed
/// subspace (minimum-rank selection).
inline constexpr double kZeroEigenvalue = 1e-10;

/// Feasibility slack for O <= sigma_u <= sigma_m.
inline constexpr double kFeasibilityTolerance = 1e-9;

struct EquilibriumSolution {
  SymMatrix V;             ///< cost kernel I - (A + A^T)
  SymMatrix B;             ///< whitened kernel sigma_m^{1/2} V sigma_m^{1/2}
  EigenPairs eig;          ///< ascending eigenpairs of B
  int k = 0;               ///< number of strictly negative eigenvalues
  SymMatrix Pi_star;       ///< projection onto the negative eigenspace of B
  SymMatrix Sigma_u_star;  ///< equilibrium posterior-mean covariance
  Matrix L;                ///< n x n linear encoder, rows k..n-1 are zero
  double encoder_cost = 0.0;
  double decoder_cost = 0.0;
  Regime regime = Regime::NonInformative;
  /// Some eigenvalue of B is zero within kZeroEigenvalue, so the equilibrium
  /// is not unique; the minimum-rank one is reported.
  bool degenerate = false;
};

SymMatrix cost_kernel(const Matrix& A);

SymMatrix mismatch_matrix(const Scenario& scen);

/// Stackelberg equilibrium of the noiseless, costless game. Throws
/// NotCheapTalk unless sigma_w == O and rho == 0.
EquilibriumSolution solve_noiseless(const Scenario& scen);

/// Scalar threshold: fully revealing above 1/2, babbling below, indifferent at 1/2.
Regime scalar_regime(double a);

/// Tr(V sigma_u) + Tr(A^T A sigma_m) + |b|^2. Throws Infeasible when sigma_u
/// leaves the Loewner interval [O, sigma_m].
double encoder_objective(const Scenario& scen, const SymMatrix& sigma_u);

}  // namespace signalgame::cheaptalk

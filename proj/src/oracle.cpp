#include "signalgame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "signalgame/rng.hpp"

namespace signalgame::oracle {

namespace {

// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the signs
// of diag(R) folded into Q.
Matrix random_orthogonal(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

Matrix symmetric_root(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.mat());
  return solver.operatorSqrt();
}

}  // namespace

std::vector<SymMatrix> sample_feasible_posteriors(const Scenario& scen, std::size_t count,
                                                  std::uint64_t seed) {
  require_pd(scen.sigma_m, "source covariance");
  const Eigen::Index n = scen.dim();
  const Matrix root = symmetric_root(scen.sigma_m);

  std::vector<SymMatrix> out(count);
  const auto total = static_cast<long>(count);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < total; ++i) {
    Vector t;
    Matrix w;
    if (i == 0) {
      t = Vector::Zero(n);
      w = Matrix::Identity(n, n);
    } else if (i == 1) {
      t = Vector::Ones(n);
      w = Matrix::Identity(n, n);
    } else {
      Rng rng = make_substream(seed, static_cast<std::uint64_t>(i));
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      w = random_orthogonal(n, rng);
      t.resize(n);
      for (Eigen::Index j = 0; j < n; ++j) t(j) = unit(rng);
    }
    const Matrix pi = w * t.asDiagonal() * w.transpose();
    out[static_cast<std::size_t>(i)] = SymMatrix(root * pi * root);
  }
  return out;
}

double direct_encoder_cost(const Scenario& scen, const SymMatrix& sigma_u) {
  const Eigen::Index n = scen.dim();
  const Matrix shifted = scen.A - Matrix::Identity(n, n);
  const Matrix error_cov = scen.sigma_m.mat() - sigma_u.mat();
  return (shifted.transpose() * shifted * sigma_u.mat()).trace() +
         (scen.A.transpose() * scen.A * error_cov).trace() + scen.b.squaredNorm();
}

BruteForceResult brute_force_noiseless(const Scenario& scen, std::size_t count,
                                       std::uint64_t seed) {
  const Eigen::Index n = scen.dim();
  if (n > kMaxExhaustiveDim) {
    throw Error(ErrorKind::TooLarge, "exhaustive subset search is capped at n = " +
                                         std::to_string(kMaxExhaustiveDim));
  }
  scen.validate();

  const Matrix root = symmetric_root(scen.sigma_m);
  const Matrix kernel = Matrix::Identity(n, n) - scen.A - scen.A.transpose();
  const Matrix whitened = root * kernel * root;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (whitened + whitened.transpose()));
  const Matrix& q = solver.eigenvectors();

  BruteForceResult best;
  best.best_subset_cost = std::numeric_limits<double>::infinity();
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    Matrix pi = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (mask & (1u << i)) pi += q.col(i) * q.col(i).transpose();
    }
    const SymMatrix sigma_u(root * pi * root);
    const double cost = direct_encoder_cost(scen, sigma_u);
    if (cost < best.best_subset_cost) {
      best.best_subset_cost = cost;
      best.best_subset = mask;
      best.best_Sigma_u = sigma_u;
    }
  }
  best.best_cost = best.best_subset_cost;

  best.best_sampled_cost = std::numeric_limits<double>::infinity();
  for (const SymMatrix& sigma_u : sample_feasible_posteriors(scen, count, seed)) {
    const double cost = direct_encoder_cost(scen, sigma_u);
    best.best_sampled_cost = std::min(best.best_sampled_cost, cost);
    if (cost < best.best_cost) {
      best.best_cost = cost;
      best.best_Sigma_u = sigma_u;
    }
  }
  return best;
}

double golden_section_power(double a, double sigma_m2, double sigma_w2, double rho,
                            double tol) {
  const double gain = (2.0 * a - 1.0) * sigma_m2;
  auto f = [&](double P) { return gain * sigma_w2 / (sigma_w2 + P) + rho * P; };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = std::sqrt(sigma_w2) * std::sqrt(std::max(gain / rho, 0.0)) + 10.0 * sigma_w2;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace signalgame::oracle

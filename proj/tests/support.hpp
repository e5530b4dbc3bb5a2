#pragma once

#include <cmath>
#include <initializer_list>
#include <random>

#include "signalgame/gaussmat.hpp"
#include "signalgame/scenario.hpp"

namespace sgtest {

using signalgame::Matrix;
using signalgame::Scenario;
using signalgame::SymMatrix;
using signalgame::Vector;

inline Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Matrix diag(std::initializer_list<double> d) {
  Vector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.asDiagonal();
}

inline Scenario scalar_scenario(double sigma_m2, double a, double sigma_w2 = 0.0,
                                double rho = 0.0, double b = 0.0) {
  return Scenario{SymMatrix(Matrix::Constant(1, 1, sigma_m2)), Matrix::Constant(1, 1, a),
                  Vector::Constant(1, b), SymMatrix(Matrix::Constant(1, 1, sigma_w2)), rho};
}

// Source covariance diag(1, 1.5), target A = diag(0.8, 0.2), optionally
// with off-diagonal source correlation.
inline Scenario fig3_scenario(double sigma12) {
  return Scenario::cheap_talk(SymMatrix(mat2(1.0, sigma12, sigma12, 1.5)), diag({0.8, 0.2}));
}

inline Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  }
  return m;
}

// Well-conditioned random SPD matrix G G^T / n + shift I.
inline SymMatrix random_spd(Eigen::Index n, std::mt19937_64& rng, double shift = 0.2) {
  const Matrix g = random_matrix(n, n, rng);
  return SymMatrix(g * g.transpose() / static_cast<double>(n) +
                   shift * Matrix::Identity(n, n));
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace sgtest

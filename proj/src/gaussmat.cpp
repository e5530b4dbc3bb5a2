#include "signalgame/gaussmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace signalgame {

namespace {

void require_finite(const SymMatrix& m) {
  if (!m.is_finite()) {
    throw Error(ErrorKind::InvalidMatrix, "matrix has non-finite entries");
  }
}

// Eigenvalue floor below which a "PSD" input is rejected. Scales with the
// matrix so large covariances with relative roundoff still pass.
double psd_floor(const Vector& values) {
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  return -kPsdTolerance * scale;
}

Matrix recompose(const EigenPairs& eig, const Vector& f) {
  return eig.vectors * f.asDiagonal() * eig.vectors.transpose();
}

}  // namespace

SymMatrix::SymMatrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimError, "symmetric matrix must be square, got " +
                                         std::to_string(m.rows()) + "x" +
                                         std::to_string(m.cols()));
  }
  if (m.rows() < 1) {
    throw Error(ErrorKind::DimError, "symmetric matrix must have dim >= 1");
  }
  // Halve before adding so entries near the double range do not overflow.
  m_ = 0.5 * m + 0.5 * m.transpose();
}

SymMatrix SymMatrix::zero(Eigen::Index n) { return SymMatrix(Matrix::Zero(n, n)); }

SymMatrix SymMatrix::identity(Eigen::Index n) {
  return SymMatrix(Matrix::Identity(n, n));
}

SymMatrix SymMatrix::diagonal(const Vector& d) {
  return SymMatrix(Matrix(d.asDiagonal()));
}

EigenPairs sym_eig(const SymMatrix& m) {
  require_finite(m);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.mat());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidMatrix, "eigendecomposition did not converge");
  }
  const Eigen::Index n = m.dim();

  // Eigen already returns ascending values; a stable sort keeps the solver's
  // vector order on ties.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return solver.eigenvalues()(a) < solver.eigenvalues()(b);
  });

  EigenPairs out{Vector(n), Matrix(n, n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    out.values(j) = solver.eigenvalues()(src);
    Vector v = solver.eigenvectors().col(src);
    Eigen::Index pivot = 0;
    for (Eigen::Index i = 1; i < n; ++i) {
      // strict comparison with a small slack keeps the first of near-equal
      // components as the pivot
      if (std::abs(v(i)) > std::abs(v(pivot)) * (1.0 + 1e-12)) pivot = i;
    }
    if (v(pivot) < 0.0) v = -v;
    out.vectors.col(j) = v;
  }
  return out;
}

double min_eigenvalue(const SymMatrix& m) { return sym_eig(m).values(0); }

void require_pd(const SymMatrix& m, const char* what) {
  const double lo = min_eigenvalue(m);
  if (!(lo > kPsdTolerance)) {
    throw Error(ErrorKind::NotPD, std::string(what) +
                                      " is not positive definite (min eigenvalue " +
                                      std::to_string(lo) + ")");
  }
}

void require_psd(const SymMatrix& m, const char* what) {
  const EigenPairs eig = sym_eig(m);
  if (eig.values(0) < psd_floor(eig.values)) {
    throw Error(ErrorKind::NotPSD, std::string(what) +
                                       " is not positive semidefinite (min eigenvalue " +
                                       std::to_string(eig.values(0)) + ")");
  }
}

SymMatrix sqrt_psd(const SymMatrix& m) {
  const EigenPairs eig = sym_eig(m);
  if (eig.values(0) < psd_floor(eig.values)) {
    throw Error(ErrorKind::NotPSD, "sqrt_psd: min eigenvalue " +
                                       std::to_string(eig.values(0)));
  }
  const Vector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  return SymMatrix(recompose(eig, roots));
}

SymMatrix inv_sqrt_pd(const SymMatrix& m) {
  const EigenPairs eig = sym_eig(m);
  if (!(eig.values(0) > kPsdTolerance)) {
    throw Error(ErrorKind::NotPD, "inv_sqrt_pd: min eigenvalue " +
                                      std::to_string(eig.values(0)));
  }
  const Vector f = eig.values.cwiseSqrt().cwiseInverse();
  return SymMatrix(recompose(eig, f));
}

SymMatrix pinv_psd(const SymMatrix& m, double tol) {
  const EigenPairs eig = sym_eig(m);
  if (eig.values(0) < psd_floor(eig.values)) {
    throw Error(ErrorKind::NotPSD, "pinv_psd: min eigenvalue " +
                                       std::to_string(eig.values(0)));
  }
  const double top = eig.values(eig.values.size() - 1);
  const double cutoff = tol * top;
  Vector f = Vector::Zero(eig.values.size());
  if (top > 0.0) {
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      if (eig.values(i) > cutoff) f(i) = 1.0 / eig.values(i);
    }
  }
  return SymMatrix(recompose(eig, f));
}

bool loewner_geq(const SymMatrix& a, const SymMatrix& b, double tol) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimError, "loewner_geq: dimension mismatch " +
                                         std::to_string(a.dim()) + " vs " +
                                         std::to_string(b.dim()));
  }
  return min_eigenvalue(SymMatrix(a.mat() - b.mat())) >= -tol;
}

double det_root(const SymMatrix& m) {
  const EigenPairs eig = sym_eig(m);
  if (!(eig.values(0) > 0.0)) {
    throw Error(ErrorKind::NotPD, "det_root: matrix is not positive definite");
  }
  return std::exp(eig.values.array().log().mean());
}

double frobenius(const Matrix& m) { return m.norm(); }

bool is_isotropic(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const double c = m(0, 0);
  return ((m - c * Matrix::Identity(m.rows(), m.cols())).cwiseAbs().array() <= tol).all();
}

}  // namespace signalgame

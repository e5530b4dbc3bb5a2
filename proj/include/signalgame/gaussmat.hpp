#pragma once

#include <Eigen/Dense>

#include "signalgame/error.hpp"

namespace signalgame {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Eigenvalues in (-kPsdTolerance, 0) are treated as roundoff and clipped.
inline constexpr double kPsdTolerance = 1e-10;
/// Default relative cutoff for the pseudoinverse.
inline constexpr double kPinvTolerance = 1e-12;

/// Dense symmetric matrix. The input is symmetrized as (M + M^T) / 2 on
/// construction, so entry (i, j) and (j, i) are bit-identical afterwards.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Matrix& m);

  static SymMatrix zero(Eigen::Index n);
  static SymMatrix identity(Eigen::Index n);
  static SymMatrix diagonal(const Vector& d);

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& mat() const { return m_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  double trace() const { return m_.trace(); }
  bool is_finite() const { return m_.allFinite(); }
  bool is_zero() const { return (m_.array() == 0.0).all(); }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.dim() == b.dim() && a.m_ == b.m_;
  }

 private:
  Matrix m_;
};

/// Ascending eigenvalues with orthonormal eigenvectors stored as columns.
/// Each eigenvector is sign-normalized so that its largest-magnitude
/// component is positive, which makes the output deterministic.
struct EigenPairs {
  Vector values;
  Matrix vectors;
};

EigenPairs sym_eig(const SymMatrix& m);

/// Symmetric PSD square root. Throws NotPSD when an eigenvalue is below
/// -kPsdTolerance.
SymMatrix sqrt_psd(const SymMatrix& m);

/// Inverse of the symmetric square root. Requires every eigenvalue to exceed
/// kPsdTolerance (NotPD otherwise).
SymMatrix inv_sqrt_pd(const SymMatrix& m);

/// Moore-Penrose pseudoinverse of a PSD matrix. Eigenvalues at or below
/// tol * max eigenvalue are treated as zero.
SymMatrix pinv_psd(const SymMatrix& m, double tol = kPinvTolerance);

/// True iff the smallest eigenvalue of a - b is >= -tol.
bool loewner_geq(const SymMatrix& a, const SymMatrix& b, double tol);

double min_eigenvalue(const SymMatrix& m);

/// |M|^{1/n}, computed as the geometric mean of the eigenvalues.
/// Requires M positive definite.
double det_root(const SymMatrix& m);

double frobenius(const Matrix& m);

/// Throws NotPD unless every eigenvalue exceeds kPsdTolerance.
void require_pd(const SymMatrix& m, const char* what);
/// Throws NotPSD if some eigenvalue is below -kPsdTolerance.
void require_psd(const SymMatrix& m, const char* what);

/// True when m == c * I entrywise within tol for some scalar c.
bool is_isotropic(const Matrix& m, double tol);

}  // namespace signalgame

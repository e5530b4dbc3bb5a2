#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "signalgame/gaussmat.hpp"
#include "support.hpp"

using namespace signalgame;
using namespace sgtest;

TEST_CASE("symmetrization makes mirrored entries bit-identical") {
  const SymMatrix s(mat2(1.0, 0.1 + 0.2, 0.3, 2.0));
  CHECK(s(0, 1) == s(1, 0));
  CHECK_THROWS_AS(SymMatrix(Matrix::Zero(2, 3)), Error);
  CHECK_THROWS_AS(SymMatrix{Matrix()}, Error);
}

TEST_CASE("sqrt_psd of a known matrix") {
  const SymMatrix r = sqrt_psd(SymMatrix(mat2(2, 1, 1, 2)));
  CHECK(r(0, 0) == doctest::Approx(1.3660254037844384).epsilon(1e-14));
  CHECK(r(0, 1) == doctest::Approx(0.3660254037844386).epsilon(1e-14));
  CHECK(r(1, 1) == doctest::Approx(1.3660254037844384).epsilon(1e-14));
}

TEST_CASE("sqrt_psd squares back and clips roundoff negatives") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    const SymMatrix m = random_spd(n, rng);
    const SymMatrix r = sqrt_psd(m);
    CHECK(max_abs_diff(r.mat() * r.mat(), m.mat()) < 1e-12);
  }
  const SymMatrix nearly(mat2(1.0, 0.0, 0.0, -1e-13));
  CHECK(sqrt_psd(nearly)(1, 1) == 0.0);
  CHECK_THROWS_AS(sqrt_psd(SymMatrix(mat2(1, 0, 0, -1e-3))), Error);
  try {
    sqrt_psd(SymMatrix(mat2(1, 0, 0, -1e-3)));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPSD);
  }
}

TEST_CASE("inv_sqrt_pd inverts sqrt_psd") {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 6; ++n) {
    const SymMatrix m = random_spd(n, rng);
    const Matrix prod = inv_sqrt_pd(m).mat() * sqrt_psd(m).mat();
    CHECK(max_abs_diff(prod, Matrix::Identity(n, n)) < 1e-10);
  }
  try {
    inv_sqrt_pd(SymMatrix(diag({1.0, 0.0})));
    FAIL("expected NotPD");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPD);
  }
}

TEST_CASE("pinv_psd satisfies the Penrose conditions on singular input") {
  std::mt19937_64 rng(13);
  const Matrix g = random_matrix(4, 2, rng);
  const SymMatrix m(g * g.transpose());
  const Matrix p = pinv_psd(m).mat();
  CHECK(max_abs_diff(m.mat() * p * m.mat(), m.mat()) < 1e-10);
  CHECK(max_abs_diff(p * m.mat() * p, p) < 1e-10);
  CHECK(pinv_psd(SymMatrix::zero(3)).mat().isZero(0.0));
}

TEST_CASE("sym_eig is ascending, orthonormal and sign-normalized") {
  std::mt19937_64 rng(14);
  for (int n = 1; n <= 8; ++n) {
    const SymMatrix m(random_matrix(n, n, rng));
    const EigenPairs e = sym_eig(m);
    for (int i = 1; i < n; ++i) CHECK(e.values(i - 1) <= e.values(i));
    CHECK(max_abs_diff(e.vectors.transpose() * e.vectors, Matrix::Identity(n, n)) < 1e-12);
    CHECK(max_abs_diff(e.vectors * e.values.asDiagonal() * e.vectors.transpose(), m.mat()) <
          1e-12);
    for (int j = 0; j < n; ++j) {
      Eigen::Index arg = 0;
      e.vectors.col(j).cwiseAbs().maxCoeff(&arg);
      CHECK(e.vectors(arg, j) > 0.0);
    }
  }
}

TEST_CASE("loewner order, det_root and isotropy") {
  CHECK(loewner_geq(SymMatrix(diag({2, 2})), SymMatrix(diag({1, 2})), 0.0));
  CHECK_FALSE(loewner_geq(SymMatrix(diag({1, 2})), SymMatrix(diag({2, 2})), 1e-9));
  CHECK(det_root(SymMatrix(diag({1, 3}))) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(min_eigenvalue(SymMatrix(diag({4, -1, 2}))) == doctest::Approx(-1.0));
  CHECK(is_isotropic(0.7 * Matrix::Identity(3, 3), 0.0));
  CHECK_FALSE(is_isotropic(diag({1.0, 1.0 + 1e-6}), 1e-10));
  CHECK(frobenius(mat2(3, 0, 0, 4)) == doctest::Approx(5.0));
}

TEST_CASE("symmetrization does not overflow near the double range") {
  const SymMatrix big(Matrix::Constant(1, 1, 1.5e308));
  CHECK(big(0, 0) == 1.5e308);
  CHECK(big.is_finite());
}

TEST_CASE("eigendecomposition examples") {
  const EigenPairs d = sym_eig(SymMatrix(diag({-0.6, 0.9})));
  CHECK(d.values(0) == doctest::Approx(-0.6));
  CHECK(d.values(1) == doctest::Approx(0.9));
  CHECK(max_abs_diff(d.vectors, Matrix::Identity(2, 2)) < 1e-15);

  const EigenPairs id = sym_eig(SymMatrix::identity(2));
  CHECK(id.values(0) == 1.0);
  CHECK(id.values(1) == 1.0);
  CHECK(max_abs_diff(id.vectors.transpose() * id.vectors, Matrix::Identity(2, 2)) < 1e-15);

  const EigenPairs swap = sym_eig(SymMatrix(mat2(0, 1, 1, 0)));
  CHECK(swap.values(0) == doctest::Approx(-1.0));
  CHECK(swap.values(1) == doctest::Approx(1.0));
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(swap.vectors, mat2(h, h, -h, h)) < 1e-14);

  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = std::nan("");
  try {
    sym_eig(SymMatrix(bad));
    FAIL("expected InvalidMatrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidMatrix);
  }
}

TEST_CASE("square root and pseudoinverse examples") {
  CHECK(max_abs_diff(sqrt_psd(SymMatrix(diag({4, 9}))).mat(), diag({2, 3})) < 1e-15);
  CHECK(max_abs_diff(sqrt_psd(SymMatrix::identity(3)).mat(), Matrix::Identity(3, 3)) < 1e-15);
  CHECK(max_abs_diff(pinv_psd(SymMatrix(diag({1, 0}))).mat(), diag({1, 0})) < 1e-15);
  CHECK(max_abs_diff(pinv_psd(SymMatrix(diag({2, 0}))).mat(), diag({0.5, 0})) < 1e-15);
}

TEST_CASE("pseudoinverse satisfies all four Penrose identities") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const int rank = 1 + trial % n;
    // Rank-deficient with a well separated spectrum: nonzero eigenvalues in
    // [0.5, 2.5], the rest exactly zero before rotation.
    const Eigen::HouseholderQR<Matrix> qr(random_matrix(n, n, rng));
    const Matrix q = qr.householderQ();
    Vector lam = Vector::Zero(n);
    std::uniform_real_distribution<double> spread(0.5, 2.5);
    for (int i = 0; i < rank; ++i) lam(i) = spread(rng);
    const Matrix m = SymMatrix(q * lam.asDiagonal() * q.transpose()).mat();
    const Matrix p = pinv_psd(SymMatrix(m)).mat();
    CHECK(max_abs_diff(m * p * m, m) < 1e-8);
    CHECK(max_abs_diff(p * m * p, p) < 1e-8);
    CHECK(max_abs_diff((m * p).transpose(), m * p) < 1e-8);
    CHECK(max_abs_diff((p * m).transpose(), p * m) < 1e-8);
  }
}

TEST_CASE("loewner order examples") {
  CHECK(loewner_geq(SymMatrix::identity(2), SymMatrix::zero(2), 0.0));
  CHECK(loewner_geq(SymMatrix(diag({1, 1.5})), SymMatrix(diag({1, 0})), 0.0));
  CHECK_FALSE(loewner_geq(SymMatrix::zero(2), SymMatrix::identity(2), 1e-9));
  std::mt19937_64 rng(16);
  for (int n = 1; n <= 6; ++n) {
    const SymMatrix m(random_matrix(n, n, rng));
    CHECK(loewner_geq(m, m, 0.0));
  }
  try {
    loewner_geq(SymMatrix::identity(2), SymMatrix::identity(3), 0.0);
    FAIL("expected DimError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimError);
  }
}

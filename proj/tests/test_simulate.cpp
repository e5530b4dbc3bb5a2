#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "signalgame/cheaptalk.hpp"
#include "signalgame/json_io.hpp"
#include "signalgame/simulate.hpp"
#include "support.hpp"

using namespace signalgame;
using namespace signalgame::simulate;
using namespace sgtest;

namespace {

SimConfig config(const Scenario& s, const Matrix& L, std::uint64_t samples, std::uint64_t seed) {
  return SimConfig{s, L, samples, seed};
}

double entry_stderr(const SimReport& r, Matrix BatchMoments::*field, int i, int j) {
  return batch_stderr(r, [&](const BatchMoments& b) { return (b.*field)(i, j); });
}

}  // namespace

TEST_CASE("lmmse decoder examples") {
  const Matrix K = lmmse_decoder(Matrix::Constant(1, 1, 1.0), SymMatrix(Matrix::Constant(1, 1, 1.0)),
                                 SymMatrix(Matrix::Constant(1, 1, 1.0)));
  CHECK(K(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lmmse_decoder(Matrix::Zero(2, 2), SymMatrix(diag({1, 2})), SymMatrix::identity(2)).isZero(0.0));
  const Matrix L = mat2(1, 0, 0, 0);
  const SymMatrix sm(diag({1.0, 1.5}));
  const Matrix K2 = lmmse_decoder(L, sm, SymMatrix::zero(2));
  CHECK(max_abs_diff(K2 * L * sm.mat(), diag({1.0, 0.0})) < 1e-12);
  CHECK_THROWS_AS(lmmse_decoder(Matrix::Zero(3, 2), sm, SymMatrix::zero(2)), Error);
}

TEST_CASE("sample_gaussian") {
  CHECK(sample_gaussian(SymMatrix::zero(2), 100, 1).isZero(0.0));
  const Matrix x = sample_gaussian(SymMatrix(mat2(1, 0.3, 0.3, 1.5)), 100000, 5);
  const Matrix cov = x * x.transpose() / static_cast<double>(x.cols());
  // stderr of a sample covariance entry is about sqrt((s_ii s_jj + s_ij^2) / N)
  CHECK(std::abs(cov(0, 1) - 0.3) <= 3.0 * std::sqrt((1.5 + 0.09) / 1e5));
  CHECK(std::abs(cov(0, 0) - 1.0) <= 3.0 * std::sqrt(2.0 / 1e5));
  CHECK(std::abs(cov(1, 1) - 1.5) <= 3.0 * std::sqrt(2.0 * 2.25 / 1e5));
  const Matrix id = sample_gaussian(SymMatrix::identity(2), 100000, 6);
  const Matrix cid = id * id.transpose() / 1e5;
  CHECK(max_abs_diff(cid, Matrix::Identity(2, 2)) <= 3.0 * std::sqrt(2.0 / 1e5));
  CHECK_THROWS_AS(sample_gaussian(SymMatrix(diag({1.0, -1.0})), 10, 1), Error);
}

TEST_CASE("babbling encoder leaves the prior variance") {
  const Scenario s = fig3_scenario(0.3);
  const SimReport r = run_sim(config(s, Matrix::Zero(2, 2), 100000, 9));
  CHECK(std::abs(r.emp_decoder_cost - s.sigma_m.trace()) <= 3.0 * r.stderr_decoder_cost);
  CHECK(r.emp_Sigma_u.mat().isZero(0.0));
}

TEST_CASE("Fig 3(a) simulation suppresses the second component") {
  const Scenario s = fig3_scenario(0.0);
  const cheaptalk::EquilibriumSolution sol = cheaptalk::solve_noiseless(s);
  SampleTrace trace;
  const SimReport r = run_sim(config(s, sol.L, 100000, 3), &trace);
  CHECK(trace.u.row(1).isZero(0.0));
  const double se00 = entry_stderr(r, &BatchMoments::Sigma_u, 0, 0);
  CHECK(std::abs(r.emp_Sigma_u(0, 0) - 1.0) <= 3.0 * se00);
  CHECK(r.emp_Sigma_u(1, 1) == 0.0);
  CHECK(std::abs(r.emp_encoder_cost - sol.encoder_cost) <= 3.0 * r.stderr_encoder_cost);
}

TEST_CASE("scalar noisy equilibrium cost") {
  const Scenario s = scalar_scenario(1.0, 1.0, 1.0, 0.25);
  const SimReport r = run_sim(config(s, Matrix::Constant(1, 1, 1.0), 100000, 17));
  CHECK(std::abs(r.emp_encoder_cost - 0.75) <= 3.0 * r.stderr_encoder_cost);
  CHECK(std::abs(r.emp_decoder_cost - 0.5) <= 3.0 * r.stderr_decoder_cost);
  CHECK(std::abs(r.emp_power - 1.0) <= 3.0 * r.stderr_power);
}

TEST_CASE("orthogonality and covariance decomposition for random encoders") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    Scenario s = Scenario::cheap_talk(random_spd(n, rng), random_matrix(n, n, rng));
    s.sigma_w = trial % 2 == 0 ? random_spd(n, rng) : SymMatrix::zero(n);
    const Matrix L = random_matrix(n, n, rng);
    const SimReport r = run_sim(config(s, L, 20000, 100 + trial));
    CHECK(r.ortho_residual <= 3.0 * r.stderr_ortho + 1e-10);
    CHECK(r.emp_decoder_cost >= 0.0);
    CHECK(r.emp_power >= 0.0);
    CHECK(min_eigenvalue(r.emp_Sigma_u) >= -1e-10);
    CHECK(min_eigenvalue(r.emp_Sigma_e) >= -1e-10);
    double var = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double su = entry_stderr(r, &BatchMoments::Sigma_u, i, j);
        const double se = entry_stderr(r, &BatchMoments::Sigma_e, i, j);
        const double cr = entry_stderr(r, &BatchMoments::cross, i, j) +
                          entry_stderr(r, &BatchMoments::cross, j, i);
        const double bound = su + se + 2.0 * cr;
        var += bound * bound;
      }
    }
    // Sigma_u + Sigma_e - Sigma_m is the sampling error of E[m m^T] minus the
    // cross terms; the stderr of a sum is at most the sum of the stderrs.
    const double gap = frobenius(r.emp_Sigma_u.mat() + r.emp_Sigma_e.mat() - s.sigma_m.mat());
    CHECK(gap <= 3.0 * std::sqrt(var) + 1e-12);
  }
}

TEST_CASE("information bound on distortion in the scalar case") {
  for (double alpha : {0.2, 0.7, 1.3}) {
    const Scenario s = scalar_scenario(1.0, 1.0, 0.5, 0.1);
    const SimReport r = run_sim(config(s, Matrix::Constant(1, 1, alpha), 50000, 77));
    const double P = alpha * alpha;
    CHECK(r.emp_decoder_cost >= 1.0 / (1.0 + P / 0.5) - 3.0 * r.stderr_decoder_cost);
  }
}

TEST_CASE("parallel run matches the serial reference") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + trial % 4;
    Scenario s = Scenario::cheap_talk(random_spd(n, rng), random_matrix(n, n, rng));
    s.sigma_w = random_spd(n, rng);
    const SimConfig cfg = config(s, random_matrix(n, n, rng), 5003 + trial, 900 + trial);
    SampleTrace tp, ts;
    const SimReport par = run_sim(cfg, &tp);
    const SimReport ser = run_sim_reference(cfg, &ts);
    CHECK(max_abs_diff(tp.m, ts.m) <= 1e-12);
    CHECK(max_abs_diff(tp.u, ts.u) <= 1e-10);
    CHECK(max_abs_diff(par.emp_Sigma_u.mat(), ser.emp_Sigma_u.mat()) <= 1e-10);
    CHECK(par.emp_encoder_cost == doctest::Approx(ser.emp_encoder_cost).epsilon(1e-10));
    CHECK(par.emp_decoder_cost == doctest::Approx(ser.emp_decoder_cost).epsilon(1e-10));
    CHECK(par.batches.size() == ser.batches.size());
  }
}

TEST_CASE("identical configs give identical reports") {
  Scenario s = fig3_scenario(0.3);
  s.sigma_w = SymMatrix(0.2 * Matrix::Identity(2, 2));
  const SimConfig cfg = config(s, mat2(0.9, 0.1, -0.2, 0.4), 30011, 42);
  CHECK(json_io::to_json(run_sim(cfg)) == json_io::to_json(run_sim(cfg)));
  const SimConfig other = config(s, cfg.encoder, 30011, 43);
  CHECK(json_io::to_json(run_sim(cfg)) != json_io::to_json(run_sim(other)));
}

TEST_CASE("batching") {
  CHECK(detail::partition(100000).size() == static_cast<std::size_t>(kBatches));
  CHECK(detail::partition(7).size() == 7);
  std::uint64_t total = 0;
  for (const auto& r : detail::partition(100003)) total += r.count;
  CHECK(total == 100003);
  const SimReport one = run_sim(config(scalar_scenario(1.0, 1.0), Matrix::Constant(1, 1, 1.0), 1, 0));
  CHECK(std::isnan(one.stderr_decoder_cost));
}

TEST_CASE("invalid configurations") {
  const Scenario s = fig3_scenario(0.0);
  try {
    run_sim(config(s, Matrix::Identity(2, 2), 0, 1));
    FAIL("expected InvalidScenario");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidScenario);
  }
  try {
    run_sim(config(s, Matrix::Identity(3, 3), 10, 1));
    FAIL("expected DimError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimError);
  }
  try {
    run_sim(config(scalar_scenario(1.5e308, 1.0), Matrix::Constant(1, 1, 1.0), 100, 1));
    FAIL("expected SimulationFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SimulationFailure);
  }
}

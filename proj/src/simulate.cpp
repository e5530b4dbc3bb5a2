#include "signalgame/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "signalgame/rng.hpp"

namespace signalgame::simulate {

Matrix lmmse_decoder(const Matrix& L, const SymMatrix& sigma_m, const SymMatrix& sigma_w) {
  if (L.cols() != sigma_m.dim() || L.rows() != sigma_w.dim()) {
    throw Error(ErrorKind::DimError,
                "lmmse_decoder: encoder is " + std::to_string(L.rows()) + "x" +
                    std::to_string(L.cols()) + ", expected " + std::to_string(sigma_w.dim()) +
                    "x" + std::to_string(sigma_m.dim()));
  }
  const SymMatrix sigma_yy(L * sigma_m.mat() * L.transpose() + sigma_w.mat());
  return sigma_m.mat() * L.transpose() * pinv_psd(sigma_yy).mat();
}

Matrix sample_gaussian(const SymMatrix& sigma, std::uint64_t n_samples, std::uint64_t seed) {
  const Matrix root = sqrt_psd(sigma).mat();
  const Eigen::Index n = sigma.dim();
  Rng rng = make_substream(seed, 0);
  std::normal_distribution<double> normal;
  Matrix out(n, static_cast<Eigen::Index>(n_samples));
  Vector z(n);
  for (Eigen::Index s = 0; s < out.cols(); ++s) {
    for (Eigen::Index i = 0; i < n; ++i) z(i) = normal(rng);
    out.col(s).noalias() = root * z;
  }
  return out;
}

double batch_stderr(std::span<const double> batch_means) {
  const std::size_t count = batch_means.size();
  if (count < 2) return std::numeric_limits<double>::quiet_NaN();
  double mean = 0.0;
  for (double v : batch_means) mean += v;
  mean /= static_cast<double>(count);
  double ss = 0.0;
  for (double v : batch_means) ss += (v - mean) * (v - mean);
  const double var = ss / static_cast<double>(count - 1);
  return std::sqrt(var / static_cast<double>(count));
}

namespace detail {

Prepared prepare(const SimConfig& cfg) {
  if (cfg.samples < 1) {
    throw Error(ErrorKind::InvalidScenario, "simulation needs at least one sample");
  }
  cfg.scenario.validate();
  const Eigen::Index n = cfg.scenario.dim();
  if (cfg.encoder.rows() != n || cfg.encoder.cols() != n) {
    throw Error(ErrorKind::DimError, "encoder must be " + std::to_string(n) + "x" +
                                         std::to_string(n));
  }
  if (!cfg.encoder.allFinite()) {
    throw Error(ErrorKind::InvalidMatrix, "encoder has non-finite entries");
  }
  Prepared p;
  p.n = n;
  p.root_m = sqrt_psd(cfg.scenario.sigma_m).mat();
  p.root_w = sqrt_psd(cfg.scenario.sigma_w).mat();
  p.K = lmmse_decoder(cfg.encoder, cfg.scenario.sigma_m, cfg.scenario.sigma_w);
  return p;
}

std::vector<BatchRange> partition(std::uint64_t samples) {
  const std::uint64_t batches = std::min<std::uint64_t>(kBatches, samples);
  const std::uint64_t base = samples / batches;
  const std::uint64_t extra = samples % batches;
  std::vector<BatchRange> out;
  out.reserve(batches);
  std::uint64_t start = 0;
  for (std::uint64_t b = 0; b < batches; ++b) {
    const std::uint64_t count = base + (b < extra ? 1 : 0);
    out.push_back({start, count});
    start += count;
  }
  return out;
}

SimReport finalize(const SimConfig& cfg, std::vector<BatchMoments> batches) {
  const Eigen::Index n = cfg.scenario.dim();
  Matrix su = Matrix::Zero(n, n);
  Matrix se = Matrix::Zero(n, n);
  Matrix cross = Matrix::Zero(n, n);
  double dec = 0.0;
  double enc = 0.0;
  double pow = 0.0;
  double total = 0.0;
  for (const BatchMoments& bm : batches) {
    const double w = static_cast<double>(bm.count);
    su += w * bm.Sigma_u;
    se += w * bm.Sigma_e;
    cross += w * bm.cross;
    dec += w * bm.decoder_cost;
    enc += w * bm.encoder_cost;
    pow += w * bm.power;
    total += w;
  }

  SimReport r;
  r.emp_Sigma_u = SymMatrix(su / total);
  r.emp_Sigma_e = SymMatrix(se / total);
  r.emp_cross = cross / total;
  r.emp_decoder_cost = dec / total;
  r.emp_encoder_cost = enc / total;
  r.emp_power = pow / total;
  r.ortho_residual = frobenius(r.emp_cross);
  if (!r.emp_Sigma_u.is_finite() || !r.emp_Sigma_e.is_finite() || !std::isfinite(r.ortho_residual) ||
      !std::isfinite(r.emp_decoder_cost) || !std::isfinite(r.emp_encoder_cost) ||
      !std::isfinite(r.emp_power)) {
    throw Error(ErrorKind::SimulationFailure, "non-finite empirical moments (overflow)");
  }
  r.samples = cfg.samples;
  r.seed = cfg.seed;
  r.batches = std::move(batches);

  r.stderr_decoder_cost = batch_stderr(r, [](const BatchMoments& b) { return b.decoder_cost; });
  r.stderr_encoder_cost = batch_stderr(r, [](const BatchMoments& b) { return b.encoder_cost; });
  r.stderr_power = batch_stderr(r, [](const BatchMoments& b) { return b.power; });
  double ortho_var = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double s = batch_stderr(r, [&](const BatchMoments& b) { return b.cross(i, j); });
      ortho_var += s * s;
    }
  }
  r.stderr_ortho = std::sqrt(ortho_var);
  return r;
}

}  // namespace detail

namespace {

// Samples are processed in column blocks so that the per-sample algebra
// becomes a handful of small matrix products.
constexpr Eigen::Index kBlock = 2048;

BatchMoments run_batch(const SimConfig& cfg, const detail::Prepared& p,
                       const detail::BatchRange& range, std::uint64_t index,
                       SampleTrace* trace) {
  const Eigen::Index n = p.n;
  const Scenario& scen = cfg.scenario;
  Rng rng = make_substream(cfg.seed, index);
  std::normal_distribution<double> normal;

  Matrix su = Matrix::Zero(n, n);
  Matrix se = Matrix::Zero(n, n);
  Matrix cross = Matrix::Zero(n, n);
  double dec = 0.0;
  double enc = 0.0;
  double pow = 0.0;

  Matrix zm(n, kBlock), zw(n, kBlock), m, x, u, e, gap;
  for (std::uint64_t done = 0; done < range.count;) {
    const auto cols = static_cast<Eigen::Index>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(kBlock), range.count - done));
    // Draw order per sample: n source normals, then n noise normals.
    for (Eigen::Index s = 0; s < cols; ++s) {
      for (Eigen::Index i = 0; i < n; ++i) zm(i, s) = normal(rng);
      for (Eigen::Index i = 0; i < n; ++i) zw(i, s) = normal(rng);
    }
    const auto Zm = zm.leftCols(cols);
    const auto Zw = zw.leftCols(cols);
    m.noalias() = p.root_m * Zm;
    x.noalias() = cfg.encoder * m;
    u.noalias() = p.K * (x + p.root_w * Zw);
    e = m - u;
    gap.noalias() = scen.A * m;
    gap.colwise() -= scen.b;
    gap -= u;

    su.noalias() += u * u.transpose();
    se.noalias() += e * e.transpose();
    cross.noalias() += u * e.transpose();
    dec += e.squaredNorm();
    const double px = x.squaredNorm();
    pow += px;
    enc += gap.squaredNorm() + scen.rho * px;

    if (trace != nullptr) {
      const auto col = static_cast<Eigen::Index>(range.start + done);
      trace->m.middleCols(col, cols) = m;
      trace->u.middleCols(col, cols) = u;
    }
    done += static_cast<std::uint64_t>(cols);
  }

  const double c = static_cast<double>(range.count);
  return BatchMoments{range.count, su / c, se / c, cross / c, dec / c, enc / c, pow / c};
}

}  // namespace

SimReport run_sim(const SimConfig& cfg, SampleTrace* trace) {
  const detail::Prepared p = detail::prepare(cfg);
  const std::vector<detail::BatchRange> ranges = detail::partition(cfg.samples);
  if (trace != nullptr) {
    trace->m.resize(p.n, static_cast<Eigen::Index>(cfg.samples));
    trace->u.resize(p.n, static_cast<Eigen::Index>(cfg.samples));
  }

  std::vector<BatchMoments> batches(ranges.size());
  const auto count = static_cast<long>(ranges.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long b = 0; b < count; ++b) {
    const auto idx = static_cast<std::size_t>(b);
    batches[idx] = run_batch(cfg, p, ranges[idx], idx, trace);
  }
  return detail::finalize(cfg, std::move(batches));
}

}  // namespace signalgame::simulate

#include <random>
#include <vector>

#include "signalgame/rng.hpp"
#include "signalgame/simulate.hpp"

namespace signalgame::simulate {

namespace {

using Vec = std::vector<double>;

void mat_vec(const Matrix& M, const Vec& v, Vec& out) {
  const std::size_t rows = static_cast<std::size_t>(M.rows());
  const std::size_t cols = static_cast<std::size_t>(M.cols());
  for (std::size_t i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      acc += M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * v[j];
    }
    out[i] = acc;
  }
}

}  // namespace

SimReport run_sim_reference(const SimConfig& cfg, SampleTrace* trace) {
  const detail::Prepared p = detail::prepare(cfg);
  const std::vector<detail::BatchRange> ranges = detail::partition(cfg.samples);
  const std::size_t n = static_cast<std::size_t>(p.n);
  const Scenario& scen = cfg.scenario;
  if (trace != nullptr) {
    trace->m.resize(p.n, static_cast<Eigen::Index>(cfg.samples));
    trace->u.resize(p.n, static_cast<Eigen::Index>(cfg.samples));
  }

  std::vector<BatchMoments> batches;
  Vec z_m(n), z_w(n), m(n), w(n), x(n), y(n), u(n), am(n);
  for (std::size_t b = 0; b < ranges.size(); ++b) {
    Rng rng = make_substream(cfg.seed, b);
    std::normal_distribution<double> normal;
    Vec su(n * n, 0.0), se(n * n, 0.0), cross(n * n, 0.0);
    double dec = 0.0, enc = 0.0, pow = 0.0;

    for (std::uint64_t s = 0; s < ranges[b].count; ++s) {
      for (double& v : z_m) v = normal(rng);
      for (double& v : z_w) v = normal(rng);
      mat_vec(p.root_m, z_m, m);
      mat_vec(p.root_w, z_w, w);
      mat_vec(cfg.encoder, m, x);
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + w[i];
      mat_vec(p.K, y, u);
      mat_vec(scen.A, m, am);

      double px = 0.0, err = 0.0, gap = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        px += x[i] * x[i];
        const double ei = m[i] - u[i];
        err += ei * ei;
        const double gi = am[i] - scen.b(static_cast<Eigen::Index>(i)) - u[i];
        gap += gi * gi;
        for (std::size_t j = 0; j < n; ++j) {
          const double ej = m[j] - u[j];
          su[i * n + j] += u[i] * u[j];
          se[i * n + j] += ei * ej;
          cross[i * n + j] += u[i] * ej;
        }
      }
      dec += err;
      pow += px;
      enc += gap + scen.rho * px;

      if (trace != nullptr) {
        const auto col = static_cast<Eigen::Index>(ranges[b].start + s);
        for (std::size_t i = 0; i < n; ++i) {
          trace->m(static_cast<Eigen::Index>(i), col) = m[i];
          trace->u(static_cast<Eigen::Index>(i), col) = u[i];
        }
      }
    }

    const double c = static_cast<double>(ranges[b].count);
    BatchMoments bm;
    bm.count = ranges[b].count;
    bm.Sigma_u = Matrix(p.n, p.n);
    bm.Sigma_e = Matrix(p.n, p.n);
    bm.cross = Matrix(p.n, p.n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto r = static_cast<Eigen::Index>(i);
        const auto k = static_cast<Eigen::Index>(j);
        bm.Sigma_u(r, k) = su[i * n + j] / c;
        bm.Sigma_e(r, k) = se[i * n + j] / c;
        bm.cross(r, k) = cross[i * n + j] / c;
      }
    }
    bm.decoder_cost = dec / c;
    bm.encoder_cost = enc / c;
    bm.power = pow / c;
    batches.push_back(std::move(bm));
  }
  return detail::finalize(cfg, std::move(batches));
}

}  // namespace signalgame::simulate

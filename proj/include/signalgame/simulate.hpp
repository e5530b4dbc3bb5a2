#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "signalgame/gaussmat.hpp"
#include "signalgame/scenario.hpp"

namespace signalgame::simulate {

/// Standard errors come from batch means over this many equal batches.
inline constexpr int kBatches = 20;

struct SimConfig {
  Scenario scenario;
  Matrix encoder;  ///< n x n linear encoder L, x = L m
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Per-batch sample means. Batch b draws from substream (seed, b) only.
struct BatchMoments {
  std::uint64_t count = 0;
  Matrix Sigma_u;  ///< mean of u u^T
  Matrix Sigma_e;  ///< mean of e e^T with e = m - u
  Matrix cross;    ///< mean of u e^T
  double decoder_cost = 0.0;
  double encoder_cost = 0.0;
  double power = 0.0;
};

struct SimReport {
  SymMatrix emp_Sigma_u;
  SymMatrix emp_Sigma_e;
  Matrix emp_cross;             ///< empirical E[u (m - u)^T]
  double emp_decoder_cost = 0.0;  ///< E|m - u|^2
  double emp_encoder_cost = 0.0;  ///< E|A m - b - u|^2 + rho E|x|^2
  double emp_power = 0.0;         ///< E|x|^2
  double ortho_residual = 0.0;    ///< Frobenius norm of emp_cross
  double stderr_decoder_cost = 0.0;
  double stderr_encoder_cost = 0.0;
  double stderr_power = 0.0;
  double stderr_ortho = 0.0;  ///< Frobenius norm of the entrywise stderr of emp_cross
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<BatchMoments> batches;
};

/// Optional per-sample record, one column per sample in draw order.
struct SampleTrace {
  Matrix m;
  Matrix u;
};

/// K = sigma_m L^T (L sigma_m L^T + sigma_w)^+ so that u = K y is the
/// conditional mean of m given y = L m + w.
Matrix lmmse_decoder(const Matrix& L, const SymMatrix& sigma_m, const SymMatrix& sigma_w);

/// dim x n_samples draws from N(0, sigma) using the symmetric PSD square root.
Matrix sample_gaussian(const SymMatrix& sigma, std::uint64_t n_samples, std::uint64_t seed);

/// Monte Carlo run of encoder -> channel -> LMMSE decoder. Batches run in
/// parallel when OpenMP is available; the report does not depend on the
/// thread count or schedule.
SimReport run_sim(const SimConfig& cfg, SampleTrace* trace = nullptr);

/// Single-threaded, loop-by-loop version of run_sim kept as a test reference.
/// Draws the same streams, so results agree with run_sim up to summation
/// order.
SimReport run_sim_reference(const SimConfig& cfg, SampleTrace* trace = nullptr);

/// Standard error of the mean of batch means (NaN with fewer than 2 batches).
double batch_stderr(std::span<const double> batch_means);

/// Standard error of any per-batch statistic.
template <class F>
double batch_stderr(const SimReport& report, F&& stat) {
  std::vector<double> values;
  values.reserve(report.batches.size());
  for (const BatchMoments& bm : report.batches) values.push_back(stat(bm));
  return batch_stderr(values);
}

namespace detail {

struct Prepared {
  Matrix root_m;
  Matrix root_w;
  Matrix K;
  Eigen::Index n = 0;
};

struct BatchRange {
  std::uint64_t start = 0;
  std::uint64_t count = 0;
};

Prepared prepare(const SimConfig& cfg);
std::vector<BatchRange> partition(std::uint64_t samples);
SimReport finalize(const SimConfig& cfg, std::vector<BatchMoments> batches);

}  // namespace detail

}  // namespace signalgame::simulate

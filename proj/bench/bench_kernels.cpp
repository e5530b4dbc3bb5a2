// Wall-clock comparison of the parallel kernels against their serial
// references. Usage: signalgame_bench [samples] [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "signalgame/phase_diagram.hpp"
#include "signalgame/simulate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace signalgame;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double parallel, double serial) {
  std::printf("%-22s parallel %9.4f s  serial %9.4f s  speedup %5.2fx\n", name, parallel, serial,
              serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t samples = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  Matrix sm(2, 2);
  sm << 1.0, 0.3, 0.3, 1.5;
  Matrix A = Matrix::Zero(2, 2);
  A(0, 0) = 0.8;
  A(1, 1) = 0.2;
  simulate::SimConfig cfg;
  cfg.scenario =
      Scenario{SymMatrix(sm), A, Vector::Zero(2), SymMatrix(0.5 * Matrix::Identity(2, 2)), 0.1};
  cfg.encoder = 0.7 * Matrix::Identity(2, 2);
  cfg.samples = samples;
  cfg.seed = 42;

  double sink = 0.0;
  const double sim_par = best_of(repeats, [&] { sink += simulate::run_sim(cfg).emp_power; });
  const double sim_ser =
      best_of(repeats, [&] { sink += simulate::run_sim_reference(cfg).emp_power; });
  report("run_sim", sim_par, sim_ser);

  const Axis a_axis{0.0, 1.5, 1501};
  const Axis rho_axis{0.0, 2.0, 2001};
  const double pd_par = best_of(repeats, [&] {
    sink += phase_diagram(a_axis, rho_axis, 1.0, 0.5).cells.back().p_star;
  });
  const double pd_ser = best_of(repeats, [&] {
    sink += phase_diagram_reference(a_axis, rho_axis, 1.0, 0.5).cells.back().p_star;
  });
  report("phase_diagram", pd_par, pd_ser);

  std::printf("checksum %g\n", sink);
  return 0;
}

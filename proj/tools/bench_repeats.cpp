// Compares the serial repeat driver against the OpenMP one on a fixed
// workload: wall time, speedup, and a bit-level equality check of the two
// result sets.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcia/experiment.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool identical(const std::vector<pcia::RunResult>& a, const std::vector<pcia::RunResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].best.cost != b[i].best.cost || a[i].best.position != b[i].best.position) return false;
    if (a[i].best_cost_trace != b[i].best_cost_trace) return false;
    if (a[i].evaluations != b[i].evaluations || a[i].restarts != b[i].restarts) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  pcia::ExperimentConfig cfg;
  cfg.problem = argc > 1 ? argv[1] : "F9";
  cfg.repeats = argc > 2 ? std::atoi(argv[2]) : 8;
  cfg.pcia = pcia::PciaConfig::defaults_for(60);
  cfg.pcia.max_iters = argc > 3 ? std::atoi(argv[3]) : 200;
  cfg.base_seed = 7;

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif

  std::printf("problem %s, %d repeats x %d iterations, pop %d, %d thread(s)\n", cfg.problem.c_str(),
              cfg.repeats, cfg.pcia.max_iters, cfg.pcia.pop_size, threads);

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = pcia::run_repeats_serial(cfg);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel = pcia::run_repeats_parallel(cfg, threads);
  const double t_parallel = seconds_since(t0);

  std::printf("serial   %.3f s\n", t_serial);
  std::printf("parallel %.3f s  (speedup %.2fx)\n", t_parallel, t_serial / t_parallel);
  if (!identical(serial, parallel)) {
    std::printf("MISMATCH: parallel results differ from the serial reference\n");
    return 1;
  }
  std::printf("results identical across both drivers\n");
  return 0;
}

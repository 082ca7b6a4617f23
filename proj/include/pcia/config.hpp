#ifndef PCIA_CONFIG_HPP
#define PCIA_CONFIG_HPP

#include <cstdint>
#include <vector>

#include "pcia/types.hpp"

namespace pcia {

/// All tunable parameters of one optimization run.
///
/// The counts (refined/mutants/smoothed/...) default to fractions of the
/// population size; defaults_for() recomputes them when the population size
/// changes. `refined` must be even: refinement works on pairs, each pair
/// contributing two offspring.
struct PciaConfig {
  int pop_size = 120;
  int max_iters = 1000;

  int refined = 120;    // offspring built from short/long path combination
  int mutants = 60;     // offspring built from the three-path assimilation rule
  int smoothed = 12;    // offspring built from the one-coordinate smoothing step

  double sim_threshold = 0.8;     // per-element similarity gate for combination
  double cosine_threshold = 0.5;  // whole-path gate for crossover

  int crossover_pairs = 12;
  int mutations = 12;
  int chaos_paths = 6;

  double sigma_fraction = 0.1;     // mutation sigma as a fraction of the box width
  double chaos_alter_prob = 0.1;   // per-element selection probability in chaos
  double smooth_fd_step = 1e-3;    // finite-difference step, relative to range
  double smooth_clamp = 0.5;       // smoothing step cap, relative to range

  int restart_window = 10;
  double restart_threshold = 1e-5;  // 0.001% relative improvement

  std::uint64_t seed = 1;

  static PciaConfig defaults_for(int pop_size) {
    PciaConfig cfg;
    cfg.pop_size = pop_size;
    cfg.refined = pop_size >= 2 ? pop_size - (pop_size % 2) : 0;
    cfg.mutants = pop_size >= 4 ? pop_size / 2 : 0;  // mutants need four distinct members
    cfg.smoothed = pop_size / 10;
    cfg.crossover_pairs = pop_size >= 2 ? pop_size / 10 : 0;
    cfg.mutations = pop_size / 10;
    cfg.chaos_paths = pop_size / 20;
    return cfg;
  }

  void validate() const {
    if (pop_size < 1) throw std::invalid_argument("PciaConfig: pop_size must be >= 1");
    if (max_iters < 0) throw std::invalid_argument("PciaConfig: max_iters must be >= 0");
    if (refined < 0 || mutants < 0 || smoothed < 0 || crossover_pairs < 0 || mutations < 0 || chaos_paths < 0)
      throw std::invalid_argument("PciaConfig: offspring counts must be >= 0");
    if (refined % 2 != 0) throw std::invalid_argument("PciaConfig: refined must be even (pairs)");
    if (refined > 0 && pop_size < 2)
      throw std::invalid_argument("PciaConfig: refinement needs pop_size >= 2");
    if (crossover_pairs > 0 && pop_size < 2)
      throw std::invalid_argument("PciaConfig: crossover needs pop_size >= 2");
    if (mutants > 0 && pop_size < 4)
      throw std::invalid_argument("PciaConfig: mutant paths need pop_size >= 4 (four distinct members)");
    if (!(sim_threshold > 0.0 && sim_threshold < 1.0))
      throw std::invalid_argument("PciaConfig: sim_threshold must be in (0,1)");
    if (!(cosine_threshold > -1.0 && cosine_threshold < 1.0))
      throw std::invalid_argument("PciaConfig: cosine_threshold must be in (-1,1)");
    if (!(sigma_fraction > 0.0 && sigma_fraction <= 1.0))
      throw std::invalid_argument("PciaConfig: sigma_fraction must be in (0,1]");
    if (!(chaos_alter_prob > 0.0 && chaos_alter_prob <= 1.0))
      throw std::invalid_argument("PciaConfig: chaos_alter_prob must be in (0,1]");
    if (!(smooth_fd_step > 0.0)) throw std::invalid_argument("PciaConfig: smooth_fd_step must be > 0");
    if (!(smooth_clamp > 0.0)) throw std::invalid_argument("PciaConfig: smooth_clamp must be > 0");
    if (restart_window < 1) throw std::invalid_argument("PciaConfig: restart_window must be >= 1");
    if (!(restart_threshold >= 0.0))
      throw std::invalid_argument("PciaConfig: restart_threshold must be >= 0");
  }
};

/// Outcome of one optimization run.
///
/// best_cost_trace holds the global best (across restarts) at the end of each
/// iteration, so it is monotone non-increasing. evaluations_trace is the
/// cumulative evaluation counter sampled at the same points; restart_flags[t]
/// is 1 when iteration t+1 triggered a restart.
struct RunResult {
  Path best;
  Vector best_cost_trace;
  std::vector<std::uint64_t> evaluations_trace;
  std::vector<std::uint8_t> restart_flags;
  std::uint64_t evaluations = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
};

}  // namespace pcia

#endif  // PCIA_CONFIG_HPP

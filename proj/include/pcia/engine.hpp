#ifndef PCIA_ENGINE_HPP
#define PCIA_ENGINE_HPP

#include <functional>

#include "pcia/config.hpp"
#include "pcia/types.hpp"

namespace pcia {

/// End-of-iteration snapshot handed to an optional observer. The population
/// is the post-selection (and, on restart iterations, post-replacement)
/// state. Observers must not mutate anything; they exist for tracing and
/// tests.
struct IterationEvent {
  int iteration = 0;  // 1-based
  bool restarted = false;
  double best_cost = 0.0;
  const Population& population;
};

using IterationObserver = std::function<void(const IterationEvent&)>;

/// Run the full optimization loop: random initial population, per-iteration
/// refinement / mutant / smoothing offspring plus the three exploration
/// operators, elitist merge, stagnation-triggered restarts. A single run is
/// strictly sequential; concurrent runs are safe because all state is local.
RunResult optimize(const Objective& objective, const SearchSpace& space, const PciaConfig& cfg,
                   const IterationObserver& observer = {});

}  // namespace pcia

#endif  // PCIA_ENGINE_HPP

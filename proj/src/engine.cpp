#include <algorithm>

#include "pcia/engine.hpp"
#include "pcia/operators.hpp"
#include "pcia/rng.hpp"

// Draw order within one iteration (one stream, fixed order, so a seed pins
// the whole run):
//   1. refinement pairs: two member indices, then the per-element draws of
//      the combination rule(s)
//   2. mutant paths: three member indices (distinct from each other and from
//      the best index), one scalar factor
//   3. smoothing: member index, coordinate index
//   4. crossover: two member indices; one cut draw only when the cosine gate
//      passes
//   5. mutation: member index, coordinate index + normal
//   6. chaos: member index, per-element selection draws
// Offspring are evaluated immediately after construction, which also fixes
// the order in which a stochastic objective consumes its own stream.

namespace pcia {

namespace {

Path random_path(const SearchSpace& space, RngStream& rng) {
  Path p;
  p.position.resize(space.lower.size());
  for (std::size_t i = 0; i < p.position.size(); ++i)
    p.position[i] = rng.uniform(space.lower[i], space.upper[i]);
  return p;
}

Population random_population(const SearchSpace& space, int m, const Objective& objective, EvalCounter& evals,
                             RngStream& rng) {
  Population pop;
  pop.space = space;
  pop.members.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) pop.members.push_back(evaluate(random_path(space, rng), objective, evals));
  return pop;
}

std::size_t best_index(const Population& pop) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < pop.members.size(); ++j)
    if (pop.members[j].cost < pop.members[best].cost) best = j;
  return best;
}

std::size_t draw_distinct(RngStream& rng, std::size_t n, std::initializer_list<std::size_t> taken) {
  for (;;) {
    const std::size_t k = rng.index(n);
    if (std::find(taken.begin(), taken.end(), k) == taken.end()) return k;
  }
}

}  // namespace

RunResult optimize(const Objective& objective, const SearchSpace& space, const PciaConfig& cfg,
                   const IterationObserver& observer) {
  space.validate();
  cfg.validate();

  RngStream rng(cfg.seed);
  EvalCounter evals;
  const int m = cfg.pop_size;

  RunResult result;
  result.seed = cfg.seed;
  result.best_cost_trace.reserve(static_cast<std::size_t>(cfg.max_iters));

  Population pop = random_population(space, m, objective, evals, rng);
  Path archive = pop.members[best_index(pop)];

  // Probe evaluations inside smoothing bypass evaluate()'s finiteness check:
  // a non-finite probe makes the smoothing step a no-op instead of an error.
  const auto probe = [&](const Vector& x) {
    const double v = objective(x);
    ++evals.count;
    return v;
  };

  // Stagnation is judged on the current cohort's own best, not the global
  // archive: after a restart the archive would stay flat while the fresh
  // population climbs back, and every window would fire again.
  Vector cohort_trace;

  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    const RangeVector range = compute_range(pop);
    const std::vector<PathClass> labels = classify_paths(pop);

    std::vector<Path> offspring;
    offspring.reserve(static_cast<std::size_t>(cfg.refined + cfg.mutants + cfg.smoothed +
                                               2 * cfg.crossover_pairs + cfg.mutations + cfg.chaos_paths));
    const auto emit = [&](Path p) { offspring.push_back(evaluate(std::move(p), objective, evals)); };

    // Refinement: each pair contributes two offspring. A mixed pair reforms
    // the short path twice, once against each rule; same-class pairs apply
    // their rule in both directions.
    for (int k = 0; k < cfg.refined / 2; ++k) {
      const std::size_t i1 = rng.index(pop.size());
      const std::size_t i2 = draw_distinct(rng, pop.size(), {i1});
      const Path& a = pop.members[i1];
      const Path& b = pop.members[i2];
      const bool a_short = labels[i1] == PathClass::Short;
      const bool b_short = labels[i2] == PathClass::Short;
      if (a_short && b_short) {
        emit(combine_short_short(a, b, range, cfg.sim_threshold, space, rng));
        emit(combine_short_short(b, a, range, cfg.sim_threshold, space, rng));
      } else if (!a_short && !b_short) {
        emit(combine_with_long(a, b, range, cfg.sim_threshold, space, rng));
        emit(combine_with_long(b, a, range, cfg.sim_threshold, space, rng));
      } else {
        const Path& s = a_short ? a : b;
        const Path& l = a_short ? b : a;
        emit(combine_short_short(s, l, range, cfg.sim_threshold, space, rng));
        emit(combine_with_long(s, l, range, cfg.sim_threshold, space, rng));
      }
    }

    // Mutant paths around the incumbent best.
    if (cfg.mutants > 0) {
      const std::size_t best = best_index(pop);
      for (int k = 0; k < cfg.mutants; ++k) {
        const std::size_t i1 = draw_distinct(rng, pop.size(), {best});
        const std::size_t i2 = draw_distinct(rng, pop.size(), {best, i1});
        const std::size_t i3 = draw_distinct(rng, pop.size(), {best, i1, i2});
        emit(mutant_path(pop.members[i1], pop.members[i2], pop.members[i3], pop.members[best], space, rng));
      }
    }

    // Smoothing (each costs the probe evaluation plus the offspring one).
    for (int k = 0; k < cfg.smoothed; ++k) {
      const std::size_t i = rng.index(pop.size());
      emit(smooth_path(pop.members[i], probe, range, cfg, space, rng));
    }

    // Crossover, gated on whole-path dissimilarity. A gated-out pair passes
    // the parents through unchanged; elitist ties then discard the clones,
    // and the offspring count stays fixed at two per pair.
    for (int k = 0; k < cfg.crossover_pairs; ++k) {
      const std::size_t i1 = rng.index(pop.size());
      const std::size_t i2 = draw_distinct(rng, pop.size(), {i1});
      const Path& a = pop.members[i1];
      const Path& b = pop.members[i2];
      if (space.dim() >= 2 && cosine_similarity(a.position, b.position) < cfg.cosine_threshold) {
        const int cut = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(space.dim() - 1)));
        auto [c1, c2] = crossover(a, b, cut);
        emit(std::move(c1));
        emit(std::move(c2));
      } else {
        emit(Path{a.position});
        emit(Path{b.position});
      }
    }

    // Mutation.
    for (int k = 0; k < cfg.mutations; ++k) {
      const std::size_t i = rng.index(pop.size());
      emit(mutate(pop.members[i], space, cfg, rng));
    }

    // Chaos.
    for (int k = 0; k < cfg.chaos_paths; ++k) {
      const std::size_t i = rng.index(pop.size());
      emit(chaos(pop.members[i], range, cfg, space, rng));
    }

    pop = select_next_generation(pop, offspring, m);

    const Path& iter_best = pop.members[best_index(pop)];
    if (iter_best.cost < archive.cost) archive = iter_best;
    result.best_cost_trace.push_back(archive.cost);
    result.restart_flags.push_back(0);
    cohort_trace.push_back(iter_best.cost);

    bool restarted = false;
    if (check_restart(cohort_trace, cfg)) {
      pop = random_population(space, m, objective, evals, rng);
      const Path& fresh_best = pop.members[best_index(pop)];
      if (fresh_best.cost < archive.cost) archive = fresh_best;
      ++result.restarts;
      result.restart_flags.back() = 1;
      cohort_trace.clear();
      restarted = true;
    }

    result.evaluations_trace.push_back(evals.count);

    if (observer) observer(IterationEvent{iter, restarted, archive.cost, pop});
  }

  result.best = archive;
  result.evaluations = evals.count;
  return result;
}

}  // namespace pcia

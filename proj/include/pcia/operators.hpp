#ifndef PCIA_OPERATORS_HPP
#define PCIA_OPERATORS_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>

#include "pcia/config.hpp"
#include "pcia/types.hpp"

// The path-construction operators. Each is a pure function of its inputs plus
// the draws it consumes from the passed stream; the draw counts and order are
// stated per operator so that seeded runs replay exactly. Operators that move
// coordinates clip the result back into the box and return it unevaluated.
//
// The stream is a template parameter so tests can substitute scripted draws;
// production code passes RngStream.

namespace pcia {

/// Population spread per dimension, floored at kRangeFloor * box width so the
/// similarity denominator stays positive on collapsed populations.
RangeVector compute_range(const Population& population);

/// Median split on cost: cost <= median is Short, the rest Long. Requires all
/// members evaluated; member order is untouched.
std::vector<PathClass> classify_paths(const Population& population);

/// Saturate the position into the box. Clears the evaluated flag only if a
/// coordinate actually moved.
Path clip_to_bounds(Path path, const SearchSpace& space);

/// Evaluate the objective at the path position, bumping the counter. Throws
/// on a non-finite result.
Path evaluate(Path path, const Objective& objective, EvalCounter& counter);

/// Per-element similarity of two positions: 1 - |x[i]-y[i]| / range[i],
/// clamped to [0,1]. 1 means identical coordinates, 0 means separated by the
/// full current range.
Vector similarity(const Vector& x, const Vector& y, const RangeVector& range);

/// Element-wise cut: first `cut` coordinates from one parent, the tail from
/// the other, both ways. cut must be in [1, dim-1].
std::pair<Path, Path> crossover(const Path& p1, const Path& p2, int cut);

/// Classic cosine similarity; zero-norm inputs are defined as 0 (maximally
/// dissimilar) so the crossover gate stays total.
double cosine_similarity(const Vector& a, const Vector& b);

/// Keep the m lowest-cost paths of current + offspring, sorted ascending.
/// Ties prefer current members, then earlier index, so selection is
/// deterministic.
Population select_next_generation(const Population& current, const std::vector<Path>& offspring, int m);

/// True when the trailing restart_window steps of the trace each improved by
/// less than restart_threshold in relative terms. Needs window+1 entries.
bool check_restart(std::span<const double> trace, const PciaConfig& cfg);

namespace detail {

inline void require_same_dim(std::size_t a, std::size_t b, const char* who) {
  if (a != b) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace detail

// Two short paths: keep the similar elements, redraw the dissimilar ones
// around the base. Consumes one symmetric() draw per element with
// sim < threshold, in index order.
template <class Rng>
Path combine_short_short(const Path& s, const Path& other, const RangeVector& range, double threshold,
                         const SearchSpace& space, Rng& rng) {
  detail::require_same_dim(s.position.size(), other.position.size(), "combine_short_short");
  const Vector sim = similarity(s.position, other.position, range);
  Path out;
  out.position = s.position;
  for (std::size_t i = 0; i < out.position.size(); ++i)
    if (sim[i] < threshold) out.position[i] = s.position[i] + rng.symmetric() * range[i] / 2.0;
  return clip_to_bounds(std::move(out), space);
}

// Base path against a long path (or two long paths): the *similar* elements
// are the suspect ones and get redrawn; dissimilar elements are kept.
// Consumes one symmetric() draw per element with sim > threshold, in index
// order.
template <class Rng>
Path combine_with_long(const Path& base, const Path& other, const RangeVector& range, double threshold,
                       const SearchSpace& space, Rng& rng) {
  detail::require_same_dim(base.position.size(), other.position.size(), "combine_with_long");
  const Vector sim = similarity(base.position, other.position, range);
  Path out;
  out.position = base.position;
  for (std::size_t i = 0; i < out.position.size(); ++i)
    if (sim[i] > threshold) out.position[i] = base.position[i] + rng.symmetric() * range[i] / 2.0;
  return clip_to_bounds(std::move(out), space);
}

// Assimilation move: rotate p1 toward the best path, corrected by the
// difference of two other members. One scalar factor drawn per call and
// shared by both terms.
template <class Rng>
Path mutant_path(const Path& p1, const Path& p2, const Path& p3, const Path& best, const SearchSpace& space,
                 Rng& rng) {
  detail::require_same_dim(p1.position.size(), p2.position.size(), "mutant_path");
  detail::require_same_dim(p1.position.size(), p3.position.size(), "mutant_path");
  detail::require_same_dim(p1.position.size(), best.position.size(), "mutant_path");
  const double factor = rng.uniform01();
  Path out;
  out.position.resize(p1.position.size());
  for (std::size_t i = 0; i < out.position.size(); ++i)
    out.position[i] = p1.position[i] + factor * (best.position[i] - p1.position[i]) +
                      factor * (p2.position[i] - p3.position[i]);
  return clip_to_bounds(std::move(out), space);
}

// One-coordinate smoothing: probe the objective a small step along a random
// axis and take a secant step toward cost zero, capped at
// smooth_clamp * range. The probe costs exactly one evaluation through the
// supplied callable; a flat or non-finite probe makes the move a no-op.
// Consumes one index() draw.
template <class Rng, class ProbeFn>
Path smooth_path(const Path& p, ProbeFn&& probe, const RangeVector& range, const PciaConfig& cfg,
                 const SearchSpace& space, Rng& rng) {
  if (!p.evaluated) throw std::invalid_argument("smooth_path: path must be evaluated");
  const std::size_t i = rng.index(p.position.size());
  const double h = cfg.smooth_fd_step * range[i];

  // Forward probe, falling back to a backward one at the box edge. The probe
  // is evaluated unconditionally: smoothing always costs exactly two
  // evaluations (the probe here, the offspring evaluation later).
  Vector probe_pos = p.position;
  if (probe_pos[i] + h <= space.upper[i])
    probe_pos[i] += h;
  else
    probe_pos[i] = std::max(space.lower[i], probe_pos[i] - h);
  const double step_used = probe_pos[i] - p.position[i];
  const double probe_cost = probe(probe_pos);

  Path out;
  out.position = p.position;
  if (!std::isfinite(probe_cost) || step_used == 0.0) return out;

  const double slope = (probe_cost - p.cost) / step_used;
  if (std::abs(slope) < 1e-12) return out;

  const double cap = cfg.smooth_clamp * range[i];
  const double move = std::clamp(-p.cost / slope, -cap, cap);
  out.position[i] += move;
  return clip_to_bounds(std::move(out), space);
}

// Single-coordinate Gaussian nudge, sigma scaled to the box width of the
// chosen dimension. Consumes one index() draw and one normal() draw.
template <class Rng>
Path mutate(const Path& p, const SearchSpace& space, const PciaConfig& cfg, Rng& rng) {
  const std::size_t i = rng.index(p.position.size());
  Path out;
  out.position = p.position;
  out.position[i] += cfg.sigma_fraction * space.width(i) * rng.normal();
  return clip_to_bounds(std::move(out), space);
}

// Full-range jump on a random subset of coordinates: each element is selected
// with probability chaos_alter_prob (one uniform01() per element, a sign()
// immediately after each selected one); when nothing gets selected, one
// forced element is drawn (index() then sign()).
template <class Rng>
Path chaos(const Path& p, const RangeVector& range, const PciaConfig& cfg, const SearchSpace& space, Rng& rng) {
  Path out;
  out.position = p.position;
  bool any = false;
  for (std::size_t i = 0; i < out.position.size(); ++i) {
    if (rng.uniform01() < cfg.chaos_alter_prob) {
      out.position[i] = p.position[i] + range[i] * rng.sign();
      any = true;
    }
  }
  if (!any) {
    const std::size_t i = rng.index(out.position.size());
    out.position[i] = p.position[i] + range[i] * rng.sign();
  }
  return clip_to_bounds(std::move(out), space);
}

}  // namespace pcia

#endif  // PCIA_OPERATORS_HPP

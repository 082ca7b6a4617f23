#include <algorithm>
#include <cmath>
#include <numeric>

#include "pcia/operators.hpp"

namespace pcia {

RangeVector compute_range(const Population& population) {
  if (population.members.empty()) throw std::invalid_argument("compute_range: empty population");
  const std::size_t dim = population.space.lower.size();
  RangeVector range(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    double lo = population.members.front().position[i];
    double hi = lo;
    for (const Path& p : population.members) {
      lo = std::min(lo, p.position[i]);
      hi = std::max(hi, p.position[i]);
    }
    range[i] = std::max(hi - lo, kRangeFloor * population.space.width(i));
  }
  return range;
}

std::vector<PathClass> classify_paths(const Population& population) {
  const std::size_t m = population.members.size();
  Vector costs(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Path& p = population.members[j];
    if (!p.evaluated) throw std::invalid_argument("classify_paths: unevaluated member");
    costs[j] = p.cost;
  }
  Vector sorted = costs;
  std::sort(sorted.begin(), sorted.end());
  const double median =
      m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);

  std::vector<PathClass> labels(m);
  for (std::size_t j = 0; j < m; ++j)
    labels[j] = costs[j] <= median ? PathClass::Short : PathClass::Long;
  return labels;
}

Path clip_to_bounds(Path path, const SearchSpace& space) {
  if (path.position.size() != space.lower.size())
    throw std::invalid_argument("clip_to_bounds: dimension mismatch");
  bool moved = false;
  for (std::size_t i = 0; i < path.position.size(); ++i) {
    const double clipped = std::min(space.upper[i], std::max(space.lower[i], path.position[i]));
    if (clipped != path.position[i]) {
      path.position[i] = clipped;
      moved = true;
    }
  }
  if (moved) path.evaluated = false;
  return path;
}

Path evaluate(Path path, const Objective& objective, EvalCounter& counter) {
  const double value = objective(path.position);
  ++counter.count;
  if (!std::isfinite(value))
    throw std::runtime_error("evaluate: objective returned a non-finite value");
  path.cost = value;
  path.evaluated = true;
  return path;
}

Vector similarity(const Vector& x, const Vector& y, const RangeVector& range) {
  detail::require_same_dim(x.size(), y.size(), "similarity");
  detail::require_same_dim(x.size(), range.size(), "similarity");
  Vector sim(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    sim[i] = std::clamp(1.0 - std::abs(x[i] - y[i]) / range[i], 0.0, 1.0);
  return sim;
}

std::pair<Path, Path> crossover(const Path& p1, const Path& p2, int cut) {
  detail::require_same_dim(p1.position.size(), p2.position.size(), "crossover");
  const int dim = static_cast<int>(p1.position.size());
  if (dim < 2) throw std::invalid_argument("crossover: needs dimension >= 2");
  if (cut < 1 || cut > dim - 1) throw std::invalid_argument("crossover: cut point out of range");
  Path a, b;
  a.position = p1.position;
  b.position = p2.position;
  for (int i = cut; i < dim; ++i) std::swap(a.position[i], b.position[i]);
  return {std::move(a), std::move(b)};
}

double cosine_similarity(const Vector& a, const Vector& b) {
  detail::require_same_dim(a.size(), b.size(), "cosine_similarity");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

Population select_next_generation(const Population& current, const std::vector<Path>& offspring, int m) {
  const std::size_t pool = current.members.size() + offspring.size();
  if (m < 0 || static_cast<std::size_t>(m) > pool)
    throw std::invalid_argument("select_next_generation: m exceeds pool size");
  for (const Path& p : offspring)
    if (!p.evaluated) throw std::invalid_argument("select_next_generation: unevaluated offspring");
  for (const Path& p : current.members)
    if (!p.evaluated) throw std::invalid_argument("select_next_generation: unevaluated member");

  // Stable sort on cost over (current, then offspring) realizes the tie
  // rule: incumbents first, then earlier index.
  std::vector<const Path*> merged;
  merged.reserve(pool);
  for (const Path& p : current.members) merged.push_back(&p);
  for (const Path& p : offspring) merged.push_back(&p);
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Path* a, const Path* b) { return a->cost < b->cost; });

  Population next;
  next.space = current.space;
  next.members.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) next.members.push_back(*merged[static_cast<std::size_t>(j)]);
  return next;
}

bool check_restart(std::span<const double> trace, const PciaConfig& cfg) {
  const std::size_t window = static_cast<std::size_t>(cfg.restart_window);
  if (trace.size() < window + 1) return false;
  for (std::size_t k = trace.size() - window; k < trace.size(); ++k) {
    const double prev = trace[k - 1];
    const double curr = trace[k];
    const double improvement = (prev - curr) / std::max(std::abs(prev), 1e-300);
    if (improvement >= cfg.restart_threshold) return false;
  }
  return true;
}

}  // namespace pcia

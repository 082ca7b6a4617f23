#ifndef PCIA_TYPES_HPP
#define PCIA_TYPES_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcia {

using Vector = std::vector<double>;

// Per-dimension spread of the current population (max - min), floored so it
// can safely appear in denominators. Produced by compute_range().
using RangeVector = std::vector<double>;

// Relative floor applied to each range entry: range[i] >= kRangeFloor * box width.
inline constexpr double kRangeFloor = 1e-12;

using Objective = std::function<double(const Vector&)>;

/// Axis-aligned box of feasible decision variables.
struct SearchSpace {
  Vector lower;
  Vector upper;

  int dim() const { return static_cast<int>(lower.size()); }

  void validate() const {
    if (lower.empty() || lower.size() != upper.size())
      throw std::invalid_argument("SearchSpace: dimension must be >= 1 with matching bound vectors");
    for (std::size_t i = 0; i < lower.size(); ++i)
      if (!(lower[i] < upper[i]))
        throw std::invalid_argument("SearchSpace: lower[" + std::to_string(i) + "] must be < upper[" +
                                    std::to_string(i) + "]");
  }

  bool contains(const Vector& x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < lower[i] || x[i] > upper[i]) return false;
    return true;
  }

  double width(std::size_t i) const { return upper[i] - lower[i]; }
};

inline SearchSpace uniform_box(int dim, double lo, double hi) {
  return SearchSpace{Vector(static_cast<std::size_t>(dim), lo), Vector(static_cast<std::size_t>(dim), hi)};
}

/// A candidate solution: a position in the search box plus its evaluated cost.
struct Path {
  Vector position;
  double cost = std::numeric_limits<double>::quiet_NaN();
  bool evaluated = false;
};

enum class PathClass : std::uint8_t { Short, Long };

/// Evaluated candidates sharing one search space. Range and short/long labels
/// are derived views computed per iteration (compute_range, classify_paths).
struct Population {
  SearchSpace space;
  std::vector<Path> members;

  std::size_t size() const { return members.size(); }
};

struct EvalCounter {
  std::uint64_t count = 0;
};

}  // namespace pcia

#endif  // PCIA_TYPES_HPP

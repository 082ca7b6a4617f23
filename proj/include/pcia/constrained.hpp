#ifndef PCIA_CONSTRAINED_HPP
#define PCIA_CONSTRAINED_HPP

#include <span>
#include <string>
#include <vector>

#include "pcia/types.hpp"

namespace pcia {

enum class Sense { Minimize, Maximize };

using ConstraintFn = double (*)(std::span<const double>);

/// A constrained test problem: raw objective in its original sense,
/// inequalities feasible at <= 0, equalities feasible at |h| <= tolerance.
struct ConstrainedProblem {
  std::string name;
  SearchSpace space;
  Sense sense = Sense::Minimize;
  double best_known = 0.0;        // original sense
  Vector best_known_position;
  ConstraintFn objective = nullptr;
  std::vector<ConstraintFn> inequalities;
  std::vector<ConstraintFn> equalities;

  bool maximization() const { return sense == Sense::Maximize; }
};

struct PenaltyConfig {
  int alpha = 2;                 // penalty exponent, 1 or 2
  double coefficient = 1e6;      // PC
  double eq_tolerance = 1e-4;    // feasibility-reporting tolerance for equalities

  void validate() const {
    if (alpha != 1 && alpha != 2) throw std::invalid_argument("PenaltyConfig: alpha must be 1 or 2");
    if (!(coefficient > 0.0)) throw std::invalid_argument("PenaltyConfig: coefficient must be > 0");
    if (!(eq_tolerance > 0.0)) throw std::invalid_argument("PenaltyConfig: eq_tolerance must be > 0");
  }
};

const std::vector<ConstrainedProblem>& constrained_catalog();

/// Throws std::invalid_argument listing the known names when absent.
const ConstrainedProblem& lookup_constrained(const std::string& name);

bool is_constrained_name(const std::string& name);

struct ConstrainedEval {
  double objective = 0.0;
  Vector inequalities;
  Vector equalities;
};

/// Raw objective and constraint values, no penalty applied.
ConstrainedEval eval_constrained(const std::string& name, std::span<const double> x);

/// One entry per constraint: max(0, g_i)^alpha for inequalities followed by
/// |h_j|^alpha for equalities. All entries are >= 0.
Vector penalty_terms(const ConstrainedProblem& problem, std::span<const double> x, int alpha);

/// The exterior-penalty reformulation as a plain minimization objective:
/// f~(x) + PC * sum of penalty terms, with f~ = -f for maximization problems.
Objective penalized_objective(const ConstrainedProblem& problem, const PenaltyConfig& config);

/// Worst constraint violation: max over max(0, g_i) and max(0, |h_j| - tol).
/// Zero exactly when x is feasible under the tolerance.
double max_violation(const ConstrainedProblem& problem, std::span<const double> x, double eq_tolerance);

}  // namespace pcia

#endif  // PCIA_CONSTRAINED_HPP

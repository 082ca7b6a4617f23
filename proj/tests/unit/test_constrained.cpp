#include <doctest.h>

#include <cmath>

#include "pcia/constrained.hpp"
#include "pcia/rng.hpp"

using namespace pcia;

TEST_CASE("every catalogued solution is feasible and reproduces the best-known value") {
  for (const ConstrainedProblem& p : constrained_catalog()) {
    INFO(p.name);
    CHECK(max_violation(p, p.best_known_position, 1e-4) == 0.0);
    const double f = p.objective(p.best_known_position);
    CHECK(std::abs(f - p.best_known) <= 1e-3 * std::max(1.0, std::abs(p.best_known)));
    CHECK(p.space.contains(p.best_known_position));
    CHECK(p.inequalities.size() + p.equalities.size() >= 1);
  }
}

TEST_CASE("eval_constrained returns raw objective and constraints") {
  const ConstrainedEval g1 = eval_constrained("G1", lookup_constrained("G1").best_known_position);
  CHECK(g1.objective == doctest::Approx(-15.0));
  for (double g : g1.inequalities) CHECK(g <= 0.0);

  const ConstrainedEval g12 = eval_constrained("G12", Vector{5, 5, 5});
  CHECK(g12.objective == doctest::Approx(-1.0));
  CHECK(g12.inequalities[0] < 0.0);

  const ConstrainedEval g4 = eval_constrained("G4", lookup_constrained("G4").best_known_position);
  CHECK(g4.objective == doctest::Approx(-30665.539).epsilon(1e-6));

  CHECK_THROWS_AS(eval_constrained("G99", Vector{0}), std::invalid_argument);
  CHECK_THROWS_AS(eval_constrained("G12", Vector{0, 0}), std::invalid_argument);
}

TEST_CASE("penalty_terms raises only violated constraints") {
  const ConstrainedProblem& g1 = lookup_constrained("G1");

  SUBCASE("strictly feasible points have all-zero terms") {
    const Vector terms = penalty_terms(g1, g1.best_known_position, 2);
    for (double t : terms) CHECK(t == 0.0);
  }

  SUBCASE("an inequality violated by 2 contributes 2^alpha") {
    Vector x(13, 1.0);
    x[9] = 4.0;  // first constraint: 2+2+4+4-10 = 2
    x[10] = 4.0;
    x[11] = 0.0;
    CHECK(penalty_terms(g1, x, 2)[0] == doctest::Approx(4.0));
    CHECK(penalty_terms(g1, x, 1)[0] == doctest::Approx(2.0));
  }

  SUBCASE("equalities contribute |h|^alpha") {
    const ConstrainedProblem& g11 = lookup_constrained("G11");
    const Vector x{1.0, -2.0};  // h = -2 - 1 = -3
    const Vector terms = penalty_terms(g11, x, 1);
    CHECK(terms[0] == doctest::Approx(3.0));
    CHECK(penalty_terms(g11, x, 2)[0] == doctest::Approx(9.0));
  }

  SUBCASE("alpha outside {1,2} is rejected") {
    CHECK_THROWS_AS(penalty_terms(g1, g1.best_known_position, 3), std::invalid_argument);
  }
}

TEST_CASE("penalized_objective composes objective, sense flip, and penalty") {
  PenaltyConfig pc;
  pc.alpha = 2;
  pc.coefficient = 1000.0;

  SUBCASE("feasible points see the bare objective") {
    const ConstrainedProblem& g12 = lookup_constrained("G12");
    const Objective obj = penalized_objective(g12, pc);
    CHECK(obj({5, 5, 5}) == doctest::Approx(-1.0));
  }

  SUBCASE("the penalty adds PC times the term sum") {
    const ConstrainedProblem& g11 = lookup_constrained("G11");
    const Objective obj = penalized_objective(g11, pc);
    const Vector x{1.0, -2.0};  // f = 1 + 9 = 10, |h|^2 = 9
    CHECK(obj(x) == doctest::Approx(10.0 + 1000.0 * 9.0));
  }

  SUBCASE("maximization problems are sign-flipped") {
    const ConstrainedProblem& g8 = lookup_constrained("G8");
    const Objective obj = penalized_objective(g8, pc);
    CHECK(obj(g8.best_known_position) == doctest::Approx(-0.0958).epsilon(1e-3));
  }
}

TEST_CASE("penalized objective dominates the bare one, with equality on the feasible set") {
  PenaltyConfig pc;
  pc.alpha = 1;
  pc.coefficient = 1e4;
  RngStream rng(6);
  for (const char* name : {"G1", "G6", "G8", "G12"}) {  // inequality-only problems
    const ConstrainedProblem& p = lookup_constrained(name);
    const Objective obj = penalized_objective(p, pc);
    const double flip = p.maximization() ? -1.0 : 1.0;
    for (int k = 0; k < 300; ++k) {
      Vector x(p.space.lower.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = rng.uniform(p.space.lower[i], p.space.upper[i]);
      const double bare = flip * p.objective(x);
      const double penalized = obj(x);
      CHECK(penalized >= bare);
      const bool feasible = max_violation(p, x, pc.eq_tolerance) == 0.0;
      if (feasible) CHECK(penalized == bare);
      for (double t : penalty_terms(p, x, pc.alpha)) CHECK(t >= 0.0);
    }
  }
}

TEST_CASE("max_violation reports the worst constraint") {
  struct Local {
    static double gm1(std::span<const double>) { return -1.0; }
    static double gp05(std::span<const double>) { return 0.5; }
  };
  ConstrainedProblem synthetic;
  synthetic.name = "synthetic";
  synthetic.space = uniform_box(1, 0.0, 1.0);
  synthetic.objective = Local::gm1;
  synthetic.inequalities = {Local::gm1, Local::gp05};
  CHECK(max_violation(synthetic, Vector{0.5}, 1e-4) == 0.5);

  const ConstrainedProblem& g11 = lookup_constrained("G11");
  CHECK(max_violation(g11, Vector{0.0, 1e-5}, 1e-4) == 0.0);  // |h| inside the tolerance
  CHECK(max_violation(g11, Vector{0.0, 2e-4}, 1e-4) == doctest::Approx(1e-4));
}

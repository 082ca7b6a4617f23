#include <cmath>
#include <sstream>

#include "pcia/constrained.hpp"

// G1-G13, the classical multi-constraint family. Formulations and best-known
// solutions follow the standard literature; every catalogued optimum is
// pinned by a feasibility-plus-value test. G2, G3, and G8 are maximization
// problems; G12 is catalogued directly in its minimization form.

namespace pcia {

namespace {

double sq(double v) { return v * v; }

// ---- G1 ----------------------------------------------------------------
double g1_f(std::span<const double> x) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += 5.0 * x[i] - 5.0 * x[i] * x[i];
  for (int i = 4; i < 13; ++i) s -= x[i];
  return s;
}
double g1_c1(std::span<const double> x) { return 2 * x[0] + 2 * x[1] + x[9] + x[10] - 10; }
double g1_c2(std::span<const double> x) { return 2 * x[0] + 2 * x[2] + x[9] + x[11] - 10; }
double g1_c3(std::span<const double> x) { return 2 * x[1] + 2 * x[2] + x[10] + x[11] - 10; }
double g1_c4(std::span<const double> x) { return -8 * x[0] + x[9]; }
double g1_c5(std::span<const double> x) { return -8 * x[1] + x[10]; }
double g1_c6(std::span<const double> x) { return -8 * x[2] + x[11]; }
double g1_c7(std::span<const double> x) { return -2 * x[3] - x[4] + x[9]; }
double g1_c8(std::span<const double> x) { return -2 * x[5] - x[6] + x[10]; }
double g1_c9(std::span<const double> x) { return -2 * x[7] - x[8] + x[11]; }

// ---- G2 (maximize) ------------------------------------------------------
double g2_f(std::span<const double> x) {
  double quartic = 0.0, prod = 1.0, weighted = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double c = std::cos(x[i]);
    quartic += std::pow(c, 4);
    prod *= c * c;
    weighted += static_cast<double>(i + 1) * x[i] * x[i];
  }
  if (weighted <= 0.0) return 0.0;  // all-zero corner of the box
  return std::abs(quartic - 2.0 * prod) / std::sqrt(weighted);
}
double g2_c1(std::span<const double> x) {
  double prod = 1.0;
  for (double v : x) prod *= v;
  return 0.75 - prod;
}
double g2_c2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s - 7.5 * static_cast<double>(x.size());
}

// ---- G3 (maximize) ------------------------------------------------------
double g3_f(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double prod = 1.0;
  for (double v : x) prod *= v;
  return std::pow(std::sqrt(n), n) * prod;
}
double g3_h1(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s - 1.0;
}

// ---- G4 ----------------------------------------------------------------
double g4_u(std::span<const double> x) {
  return 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4];
}
double g4_v(std::span<const double> x) {
  return 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2];
}
double g4_w(std::span<const double> x) {
  return 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3];
}
double g4_f(std::span<const double> x) {
  return 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141;
}
double g4_c1(std::span<const double> x) { return g4_u(x) - 92.0; }
double g4_c2(std::span<const double> x) { return -g4_u(x); }
double g4_c3(std::span<const double> x) { return g4_v(x) - 110.0; }
double g4_c4(std::span<const double> x) { return 90.0 - g4_v(x); }
double g4_c5(std::span<const double> x) { return g4_w(x) - 25.0; }
double g4_c6(std::span<const double> x) { return 20.0 - g4_w(x); }

// ---- G5 ----------------------------------------------------------------
double g5_f(std::span<const double> x) {
  return 3.0 * x[0] + 1e-6 * std::pow(x[0], 3) + 2.0 * x[1] + (2e-6 / 3.0) * std::pow(x[1], 3);
}
double g5_c1(std::span<const double> x) { return -x[3] + x[2] - 0.55; }
double g5_c2(std::span<const double> x) { return -x[2] + x[3] - 0.55; }
double g5_h1(std::span<const double> x) {
  return 1000.0 * std::sin(-x[2] - 0.25) + 1000.0 * std::sin(-x[3] - 0.25) + 894.8 - x[0];
}
double g5_h2(std::span<const double> x) {
  return 1000.0 * std::sin(x[2] - 0.25) + 1000.0 * std::sin(x[2] - x[3] - 0.25) + 894.8 - x[1];
}
double g5_h3(std::span<const double> x) {
  return 1000.0 * std::sin(x[3] - 0.25) + 1000.0 * std::sin(x[3] - x[2] - 0.25) + 1294.8;
}

// ---- G6 ----------------------------------------------------------------
double g6_f(std::span<const double> x) { return std::pow(x[0] - 10.0, 3) + std::pow(x[1] - 20.0, 3); }
double g6_c1(std::span<const double> x) { return -sq(x[0] - 5.0) - sq(x[1] - 5.0) + 100.0; }
double g6_c2(std::span<const double> x) { return sq(x[0] - 6.0) + sq(x[1] - 5.0) - 82.81; }

// ---- G7 ----------------------------------------------------------------
double g7_f(std::span<const double> x) {
  return x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14.0 * x[0] - 16.0 * x[1] + sq(x[2] - 10.0) +
         4.0 * sq(x[3] - 5.0) + sq(x[4] - 3.0) + 2.0 * sq(x[5] - 1.0) + 5.0 * x[6] * x[6] +
         7.0 * sq(x[7] - 11.0) + 2.0 * sq(x[8] - 10.0) + sq(x[9] - 7.0) + 45.0;
}
double g7_c1(std::span<const double> x) { return -105.0 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7]; }
double g7_c2(std::span<const double> x) { return 10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7]; }
double g7_c3(std::span<const double> x) { return -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12; }
double g7_c4(std::span<const double> x) {
  return 3.0 * sq(x[0] - 2.0) + 4.0 * sq(x[1] - 3.0) + 2.0 * x[2] * x[2] - 7.0 * x[3] - 120.0;
}
double g7_c5(std::span<const double> x) {
  return 5.0 * x[0] * x[0] + 8.0 * x[1] + sq(x[2] - 6.0) - 2.0 * x[3] - 40.0;
}
double g7_c6(std::span<const double> x) {
  return x[0] * x[0] + 2.0 * sq(x[1] - 2.0) - 2.0 * x[0] * x[1] + 14.0 * x[4] - 6.0 * x[5];
}
double g7_c7(std::span<const double> x) {
  return 0.5 * sq(x[0] - 8.0) + 2.0 * sq(x[1] - 4.0) + 3.0 * x[4] * x[4] - x[5] - 30.0;
}
double g7_c8(std::span<const double> x) {
  return -3.0 * x[0] + 6.0 * x[1] + 12.0 * sq(x[8] - 8.0) - 7.0 * x[9];
}

// ---- G8 (maximize) ------------------------------------------------------
double g8_f(std::span<const double> x) {
  const double denom = std::pow(x[0], 3) * (x[0] + x[1]);
  if (denom == 0.0) return 0.0;  // singular box corner, far outside the feasible region
  const double s1 = std::sin(2.0 * 3.14159265358979323846 * x[0]);
  const double s2 = std::sin(2.0 * 3.14159265358979323846 * x[1]);
  return std::pow(s1, 3) * s2 / denom;
}
double g8_c1(std::span<const double> x) { return x[0] * x[0] - x[1] + 1.0; }
double g8_c2(std::span<const double> x) { return 1.0 - x[0] + sq(x[1] - 4.0); }

// ---- G9 ----------------------------------------------------------------
double g9_f(std::span<const double> x) {
  return sq(x[0] - 10.0) + 5.0 * sq(x[1] - 12.0) + std::pow(x[2], 4) + 3.0 * sq(x[3] - 11.0) +
         10.0 * std::pow(x[4], 6) + 7.0 * x[5] * x[5] + std::pow(x[6], 4) - 4.0 * x[5] * x[6] -
         10.0 * x[5] - 8.0 * x[6];
}
double g9_c1(std::span<const double> x) {
  return -127.0 + 2.0 * x[0] * x[0] + 3.0 * std::pow(x[1], 4) + x[2] + 4.0 * x[3] * x[3] + 5.0 * x[4];
}
double g9_c2(std::span<const double> x) {
  return -282.0 + 7.0 * x[0] + 3.0 * x[1] + 10.0 * x[2] * x[2] + x[3] - x[4];
}
double g9_c3(std::span<const double> x) {
  return -196.0 + 23.0 * x[0] + x[1] * x[1] + 6.0 * x[5] * x[5] - 8.0 * x[6];
}
double g9_c4(std::span<const double> x) {
  return 4.0 * x[0] * x[0] + x[1] * x[1] - 3.0 * x[0] * x[1] + 2.0 * x[2] * x[2] + 5.0 * x[5] -
         11.0 * x[6];
}

// ---- G10 ---------------------------------------------------------------
double g10_f(std::span<const double> x) { return x[0] + x[1] + x[2]; }
double g10_c1(std::span<const double> x) { return -1.0 + 0.0025 * (x[3] + x[5]); }
double g10_c2(std::span<const double> x) { return -1.0 + 0.0025 * (x[4] + x[6] - x[3]); }
double g10_c3(std::span<const double> x) { return -1.0 + 0.01 * (x[7] - x[4]); }
double g10_c4(std::span<const double> x) {
  return -x[0] * x[5] + 833.33252 * x[3] + 100.0 * x[0] - 83333.333;
}
double g10_c5(std::span<const double> x) {
  return -x[1] * x[6] + 1250.0 * x[4] + x[1] * x[3] - 1250.0 * x[3];
}
double g10_c6(std::span<const double> x) {
  return -x[2] * x[7] + 1250000.0 + x[2] * x[4] - 2500.0 * x[4];
}

// ---- G11 ---------------------------------------------------------------
double g11_f(std::span<const double> x) { return x[0] * x[0] + sq(x[1] - 1.0); }
double g11_h1(std::span<const double> x) { return x[1] - x[0] * x[0]; }

// ---- G12 ---------------------------------------------------------------
double g12_f(std::span<const double> x) {
  return -(100.0 - sq(x[0] - 5.0) - sq(x[1] - 5.0) - sq(x[2] - 5.0)) / 100.0;
}
double g12_c1(std::span<const double> x) {
  // Feasible iff within 0.25 of some integer grid point (1..9)^3; the
  // nearest grid point minimizes each squared term independently.
  double d = 0.0;
  for (double v : x) {
    const double p = std::min(9.0, std::max(1.0, std::round(v)));
    d += sq(v - p);
  }
  return d - 0.0625;
}

// ---- G13 ---------------------------------------------------------------
double g13_f(std::span<const double> x) { return std::exp(x[0] * x[1] * x[2] * x[3] * x[4]); }
double g13_h1(std::span<const double> x) {
  return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4] - 10.0;
}
double g13_h2(std::span<const double> x) { return x[1] * x[2] - 5.0 * x[3] * x[4]; }
double g13_h3(std::span<const double> x) { return std::pow(x[0], 3) + std::pow(x[1], 3) + 1.0; }

std::vector<ConstrainedProblem> build_catalog() {
  std::vector<ConstrainedProblem> gs;

  {
    ConstrainedProblem p;
    p.name = "G1";
    p.space.lower = Vector(13, 0.0);
    p.space.upper = Vector(13, 1.0);
    p.space.upper[9] = p.space.upper[10] = p.space.upper[11] = 100.0;
    p.sense = Sense::Minimize;
    p.best_known = -15.0;
    p.best_known_position = {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1};
    p.objective = g1_f;
    p.inequalities = {g1_c1, g1_c2, g1_c3, g1_c4, g1_c5, g1_c6, g1_c7, g1_c8, g1_c9};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G2";
    p.space = uniform_box(20, 0.0, 10.0);
    p.sense = Sense::Maximize;
    p.best_known = 0.8036191041255873;
    p.best_known_position = {3.16246061572185,  3.12833142812967,  3.09479212988791,  3.06145059523469,
                             3.02792915885555,  2.99382606701730,  2.95866871765285,  2.92184227312450,
                             0.49482511456933,  0.48835711005490,  0.48231642711865,  0.47664475092742,
                             0.47129550835493,  0.46623099264167,  0.46142004984199,  0.45683664767217,
                             0.45245876903267,  0.44826762241853,  0.44424700958760,  0.44038285956317};
    p.objective = g2_f;
    p.inequalities = {g2_c1, g2_c2};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G3";
    p.space = uniform_box(10, 0.0, 1.0);
    p.sense = Sense::Maximize;
    p.best_known = 1.0;
    p.best_known_position = Vector(10, 1.0 / std::sqrt(10.0));
    p.objective = g3_f;
    p.equalities = {g3_h1};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G4";
    p.space.lower = {78, 33, 27, 27, 27};
    p.space.upper = {102, 45, 45, 45, 45};
    p.sense = Sense::Minimize;
    p.best_known = -30665.538671783317;
    p.best_known_position = {78, 33, 29.9952560256815985, 45, 36.7758129057882073};
    p.objective = g4_f;
    p.inequalities = {g4_c1, g4_c2, g4_c3, g4_c4, g4_c5, g4_c6};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G5";
    p.space.lower = {0, 0, -0.55, -0.55};
    p.space.upper = {1200, 1200, 0.55, 0.55};
    p.sense = Sense::Minimize;
    p.best_known = 5126.498109595272;
    p.best_known_position = {679.9453133987245, 1026.067139505126, 0.11887636909441043,
                             -0.3962335510192057};
    p.objective = g5_f;
    p.inequalities = {g5_c1, g5_c2};
    p.equalities = {g5_h1, g5_h2, g5_h3};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G6";
    p.space.lower = {13, 0};
    p.space.upper = {100, 100};
    p.sense = Sense::Minimize;
    p.best_known = -6961.813875580138;
    p.best_known_position = {14.09500000000000064, 0.8429607892154795668};
    p.objective = g6_f;
    p.inequalities = {g6_c1, g6_c2};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G7";
    p.space = uniform_box(10, -10.0, 10.0);
    p.sense = Sense::Minimize;
    p.best_known = 24.306209068990547;
    p.best_known_position = {2.171996341425809, 2.363683041585979, 8.773925739125747,
                             5.095984437453828, 0.9906547565458124, 1.4305739285409216,
                             1.3216441536551484, 9.828725765230324, 8.280091588715718,
                             8.375926647742652};
    p.objective = g7_f;
    p.inequalities = {g7_c1, g7_c2, g7_c3, g7_c4, g7_c5, g7_c6, g7_c7, g7_c8};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G8";
    p.space = uniform_box(2, 0.0, 10.0);
    p.sense = Sense::Maximize;
    p.best_known = 0.09582504141803586;
    p.best_known_position = {1.22797135260752599, 4.24537336612274885};
    p.objective = g8_f;
    p.inequalities = {g8_c1, g8_c2};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G9";
    p.space = uniform_box(7, -10.0, 10.0);
    p.sense = Sense::Minimize;
    p.best_known = 680.6300573744021;
    p.best_known_position = {2.33049935147405174, 1.95137236847114592, -0.477541399510615805,
                             4.36572624923625874, -0.624486959100388983, 1.03813099410962173,
                             1.5942266780671519};
    p.objective = g9_f;
    p.inequalities = {g9_c1, g9_c2, g9_c3, g9_c4};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G10";
    p.space.lower = {100, 1000, 1000, 10, 10, 10, 10, 10};
    p.space.upper = {10000, 10000, 10000, 1000, 1000, 1000, 1000, 1000};
    p.sense = Sense::Minimize;
    p.best_known = 7049.248020528668;
    p.best_known_position = {579.306685017979589, 1359.97067807935605, 5109.97065743133317,
                             182.01769963061534, 295.601173702746792, 217.982300369384632,
                             286.41652592786852, 395.601173702746735};
    p.objective = g10_f;
    p.inequalities = {g10_c1, g10_c2, g10_c3, g10_c4, g10_c5, g10_c6};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G11";
    p.space = uniform_box(2, -1.0, 1.0);
    p.sense = Sense::Minimize;
    p.best_known = 0.75;
    p.best_known_position = {0.7071067811865476, 0.5};
    p.objective = g11_f;
    p.equalities = {g11_h1};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G12";
    p.space = uniform_box(3, 0.0, 10.0);
    p.sense = Sense::Minimize;
    p.best_known = -1.0;
    p.best_known_position = {5, 5, 5};
    p.objective = g12_f;
    p.inequalities = {g12_c1};
    gs.push_back(std::move(p));
  }
  {
    ConstrainedProblem p;
    p.name = "G13";
    p.space.lower = {-2.3, -2.3, -3.2, -3.2, -3.2};
    p.space.upper = {2.3, 2.3, 3.2, 3.2, 3.2};
    p.sense = Sense::Minimize;
    p.best_known = 0.0539498477702721;
    p.best_known_position = {-1.7171435654654597, 1.595709684475903, 1.8272457620855018,
                             -0.7636430860063796, -0.763643071457869};
    p.objective = g13_f;
    p.equalities = {g13_h1, g13_h2, g13_h3};
    gs.push_back(std::move(p));
  }

  return gs;
}

void require_dim(const ConstrainedProblem& p, std::size_t got) {
  if (got != p.space.lower.size())
    throw std::invalid_argument(p.name + ": expected dimension " +
                                std::to_string(p.space.lower.size()) + ", got " + std::to_string(got));
}

}  // namespace

const std::vector<ConstrainedProblem>& constrained_catalog() {
  static const std::vector<ConstrainedProblem> catalog = build_catalog();
  return catalog;
}

const ConstrainedProblem& lookup_constrained(const std::string& name) {
  for (const ConstrainedProblem& p : constrained_catalog())
    if (p.name == name) return p;
  std::ostringstream msg;
  msg << "unknown constrained problem '" << name << "'; available:";
  for (const ConstrainedProblem& p : constrained_catalog()) msg << ' ' << p.name;
  throw std::invalid_argument(msg.str());
}

bool is_constrained_name(const std::string& name) {
  for (const ConstrainedProblem& p : constrained_catalog())
    if (p.name == name) return true;
  return false;
}

ConstrainedEval eval_constrained(const std::string& name, std::span<const double> x) {
  const ConstrainedProblem& p = lookup_constrained(name);
  require_dim(p, x.size());
  ConstrainedEval out;
  out.objective = p.objective(x);
  out.inequalities.reserve(p.inequalities.size());
  for (ConstraintFn g : p.inequalities) out.inequalities.push_back(g(x));
  out.equalities.reserve(p.equalities.size());
  for (ConstraintFn h : p.equalities) out.equalities.push_back(h(x));
  return out;
}

Vector penalty_terms(const ConstrainedProblem& problem, std::span<const double> x, int alpha) {
  if (alpha != 1 && alpha != 2) throw std::invalid_argument("penalty_terms: alpha must be 1 or 2");
  require_dim(problem, x.size());
  Vector terms;
  terms.reserve(problem.inequalities.size() + problem.equalities.size());
  for (ConstraintFn g : problem.inequalities) {
    const double v = std::max(0.0, g(x));
    terms.push_back(alpha == 1 ? v : v * v);
  }
  for (ConstraintFn h : problem.equalities) {
    const double v = std::abs(h(x));
    terms.push_back(alpha == 1 ? v : v * v);
  }
  return terms;
}

Objective penalized_objective(const ConstrainedProblem& problem, const PenaltyConfig& config) {
  config.validate();
  const double flip = problem.maximization() ? -1.0 : 1.0;
  const ConstrainedProblem* p = &problem;
  const int alpha = config.alpha;
  const double pc = config.coefficient;
  return [p, flip, alpha, pc](const Vector& x) {
    double total = flip * p->objective(x);
    for (double t : penalty_terms(*p, x, alpha)) total += pc * t;
    return total;
  };
}

double max_violation(const ConstrainedProblem& problem, std::span<const double> x, double eq_tolerance) {
  require_dim(problem, x.size());
  double worst = 0.0;
  for (ConstraintFn g : problem.inequalities) worst = std::max(worst, g(x));
  for (ConstraintFn h : problem.equalities)
    worst = std::max(worst, std::abs(h(x)) - eq_tolerance);
  return std::max(0.0, worst);
}

}  // namespace pcia

#include <cmath>
#include <numbers>
#include <sstream>

#include "pcia/benchmarks.hpp"

// F1-F23: the classical unimodal / multimodal / fixed-dimension suite.
// Constant tables (foxholes, Kowalik, Hartmann, Shekel) follow the standard
// literature values and are pinned by the minimum-attainment tests.

namespace pcia {

namespace {

constexpr double kPi = std::numbers::pi;

double sphere(std::span<const double> x, RngStream*) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double schwefel_2_22(std::span<const double> x, RngStream*) {
  double sum = 0.0, prod = 1.0;
  for (double v : x) {
    sum += std::abs(v);
    prod *= std::abs(v);
  }
  return sum + prod;
}

double schwefel_1_2(std::span<const double> x, RngStream*) {
  double s = 0.0, prefix = 0.0;
  for (double v : x) {
    prefix += v;
    s += prefix * prefix;
  }
  return s;
}

double schwefel_2_21(std::span<const double> x, RngStream*) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double rosenbrock(std::span<const double> x, RngStream*) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double step(std::span<const double> x, RngStream*) {
  double s = 0.0;
  for (double v : x) {
    const double t = std::floor(v + 0.5);
    s += t * t;
  }
  return s;
}

double quartic_noise(std::span<const double> x, RngStream* noise) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * std::pow(x[i], 4);
  return s + (noise ? noise->uniform01() : 0.0);
}

double schwefel_sine(std::span<const double> x, RngStream*) {
  double s = 0.0;
  for (double v : x) s += -v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

double rastrigin(std::span<const double> x, RngStream*) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
  return s;
}

double ackley(std::span<const double> x, RngStream*) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0, cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x, RngStream*) {
  double sum = 0.0, prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum / 4000.0 - prod + 1.0;
}

double bound_penalty(double v, double a, double k, double m) {
  if (v > a) return k * std::pow(v - a, m);
  if (v < -a) return k * std::pow(-v - a, m);
  return 0.0;
}

double penalized_1(std::span<const double> x, RngStream*) {
  const std::size_t n = x.size();
  const auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  double s = 10.0 * std::pow(std::sin(kPi * y(0)), 2);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = y(i) - 1.0;
    s += d * d * (1.0 + 10.0 * std::pow(std::sin(kPi * y(i + 1)), 2));
  }
  const double dn = y(n - 1) - 1.0;
  s += dn * dn;
  double u = 0.0;
  for (double v : x) u += bound_penalty(v, 10.0, 100.0, 4.0);
  return kPi / static_cast<double>(n) * s + u;
}

double penalized_2(std::span<const double> x, RngStream*) {
  const std::size_t n = x.size();
  double s = std::pow(std::sin(3.0 * kPi * x[0]), 2);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = x[i] - 1.0;
    s += d * d * (1.0 + std::pow(std::sin(3.0 * kPi * x[i + 1]), 2));
  }
  const double dn = x[n - 1] - 1.0;
  s += dn * dn * (1.0 + std::pow(std::sin(2.0 * kPi * x[n - 1]), 2));
  double u = 0.0;
  for (double v : x) u += bound_penalty(v, 5.0, 100.0, 4.0);
  return 0.1 * s + u;
}

double foxholes(std::span<const double> x, RngStream*) {
  static const double a1[25] = {-32, -16, 0,   16,  32, -32, -16, 0,   16,  32, -32, -16, 0,
                                16,  32,  -32, -16, 0,  16,  32,  -32, -16, 0,  16,  32};
  static const double a2[25] = {-32, -32, -32, -32, -32, -16, -16, -16, -16, -16, 0,  0,  0,
                                0,   0,   16,  16,  16,  16,  16,  32,  32,  32,  32, 32};
  double s = 1.0 / 500.0;
  for (int j = 0; j < 25; ++j) {
    const double d1 = x[0] - a1[j];
    const double d2 = x[1] - a2[j];
    s += 1.0 / (static_cast<double>(j + 1) + std::pow(d1, 6) + std::pow(d2, 6));
  }
  return 1.0 / s;
}

double kowalik(std::span<const double> x, RngStream*) {
  static const double a[11] = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                               0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
  static const double binv[11] = {0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16};
  double s = 0.0;
  for (int i = 0; i < 11; ++i) {
    const double b = 1.0 / binv[i];
    const double r = a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
    s += r * r;
  }
  return s;
}

double six_hump_camel(std::span<const double> x, RngStream*) {
  const double x1 = x[0], x2 = x[1];
  return 4.0 * x1 * x1 - 2.1 * std::pow(x1, 4) + std::pow(x1, 6) / 3.0 + x1 * x2 - 4.0 * x2 * x2 +
         4.0 * std::pow(x2, 4);
}

double branin(std::span<const double> x, RngStream*) {
  const double x1 = x[0], x2 = x[1];
  const double t = x2 - 5.1 / (4.0 * kPi * kPi) * x1 * x1 + 5.0 / kPi * x1 - 6.0;
  return t * t + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(x1) + 10.0;
}

double goldstein_price(std::span<const double> x, RngStream*) {
  const double x1 = x[0], x2 = x[1];
  const double p = x1 + x2 + 1.0;
  const double q = 2.0 * x1 - 3.0 * x2;
  const double t1 =
      1.0 + p * p * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
  const double t2 =
      30.0 + q * q * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
  return t1 * t2;
}

const double kHartmannC[4] = {1.0, 1.2, 3.0, 3.2};

double hartmann3(std::span<const double> x, RngStream*) {
  static const double a[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
  static const double p[4][3] = {{0.3689, 0.1170, 0.2673},
                                 {0.4699, 0.4387, 0.7470},
                                 {0.1091, 0.8732, 0.5547},
                                 {0.03815, 0.5743, 0.8828}};
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    double e = 0.0;
    for (int j = 0; j < 3; ++j) e += a[i][j] * (x[j] - p[i][j]) * (x[j] - p[i][j]);
    s -= kHartmannC[i] * std::exp(-e);
  }
  return s;
}

double hartmann6(std::span<const double> x, RngStream*) {
  static const double a[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                 {0.05, 10, 17, 0.1, 8, 14},
                                 {3, 3.5, 1.7, 10, 17, 8},
                                 {17, 8, 0.05, 10, 0.1, 14}};
  static const double p[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                 {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                 {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                                 {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    double e = 0.0;
    for (int j = 0; j < 6; ++j) e += a[i][j] * (x[j] - p[i][j]) * (x[j] - p[i][j]);
    s -= kHartmannC[i] * std::exp(-e);
  }
  return s;
}

const double kShekelA[10][4] = {{4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8}, {6, 6, 6, 6}, {3, 7, 3, 7},
                                {2, 9, 2, 9}, {5, 5, 3, 3}, {8, 1, 8, 1}, {6, 2, 6, 2}, {7, 3.6, 7, 3.6}};
const double kShekelC[10] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

template <int M>
double shekel(std::span<const double> x, RngStream*) {
  double s = 0.0;
  for (int i = 0; i < M; ++i) {
    double d = kShekelC[i];
    for (int j = 0; j < 4; ++j) d += (x[j] - kShekelA[i][j]) * (x[j] - kShekelA[i][j]);
    s -= 1.0 / d;
  }
  return s;
}

std::vector<Benchmark> build_catalog() {
  std::vector<Benchmark> fs;
  const auto add = [&](std::string name, int dim, double lo, double hi, double minimum, Vector optimum,
                       double (*eval)(std::span<const double>, RngStream*)) {
    fs.push_back(Benchmark{std::move(name), dim, uniform_box(dim, lo, hi), minimum, std::move(optimum), eval});
  };

  add("F1", 30, -100, 100, 0.0, Vector(30, 0.0), sphere);
  add("F2", 30, -10, 10, 0.0, Vector(30, 0.0), schwefel_2_22);
  add("F3", 30, -100, 100, 0.0, Vector(30, 0.0), schwefel_1_2);
  add("F4", 30, -100, 100, 0.0, Vector(30, 0.0), schwefel_2_21);
  add("F5", 30, -30, 30, 0.0, Vector(30, 1.0), rosenbrock);
  add("F6", 30, -100, 100, 0.0, Vector(30, 0.0), step);
  add("F7", 30, -1.28, 1.28, 0.0, Vector(30, 0.0), quartic_noise);
  add("F8", 30, -500, 500, -418.9829 * 30, Vector(30, 420.9687), schwefel_sine);
  add("F9", 30, -5.12, 5.12, 0.0, Vector(30, 0.0), rastrigin);
  add("F10", 30, -32, 32, 0.0, Vector(30, 0.0), ackley);
  add("F11", 30, -600, 600, 0.0, Vector(30, 0.0), griewank);
  add("F12", 30, -50, 50, 0.0, Vector(30, -1.0), penalized_1);
  add("F13", 30, -50, 50, 0.0, Vector(30, 1.0), penalized_2);
  add("F14", 2, -65, 65, 0.998004, Vector{-32.0, -32.0}, foxholes);
  add("F15", 4, -5, 5, 0.00030, Vector{0.192833, 0.190836, 0.123117, 0.135766}, kowalik);
  add("F16", 2, -5, 5, -1.0316, Vector{0.08984, -0.7126}, six_hump_camel);
  add("F17", 2, -5, 5, 0.3978874, Vector{kPi, 2.275}, branin);
  add("F18", 2, -2, 2, 3.0, Vector{0.0, -1.0}, goldstein_price);
  add("F19", 3, 1, 3, -3.862782, Vector{0.114614, 0.555649, 0.852547}, hartmann3);
  add("F20", 6, 0, 1, -3.322368, Vector{0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573},
      hartmann6);
  add("F21", 4, 0, 10, -10.1532, Vector{4.00004, 4.00013, 4.00004, 4.00013}, shekel<5>);
  add("F22", 4, 0, 10, -10.4029, Vector{4.00057, 4.00069, 3.99949, 3.99961}, shekel<7>);
  add("F23", 4, 0, 10, -10.5364, Vector{4.00075, 4.00059, 3.99966, 3.99951}, shekel<10>);
  return fs;
}

}  // namespace

const std::vector<Benchmark>& benchmark_catalog() {
  static const std::vector<Benchmark> catalog = build_catalog();
  return catalog;
}

const Benchmark& lookup_function(const std::string& name) {
  for (const Benchmark& b : benchmark_catalog())
    if (b.name == name) return b;
  std::ostringstream msg;
  msg << "unknown benchmark function '" << name << "'; available:";
  for (const Benchmark& b : benchmark_catalog()) msg << ' ' << b.name;
  throw std::invalid_argument(msg.str());
}

bool is_benchmark_name(const std::string& name) {
  for (const Benchmark& b : benchmark_catalog())
    if (b.name == name) return true;
  return false;
}

double eval_benchmark(const std::string& name, std::span<const double> x, RngStream* noise) {
  const Benchmark& b = lookup_function(name);
  if (static_cast<int>(x.size()) != b.dim)
    throw std::invalid_argument(name + ": expected dimension " + std::to_string(b.dim) + ", got " +
                                std::to_string(x.size()));
  return b.eval(x, noise);
}

Objective make_objective(const Benchmark& b, std::shared_ptr<RngStream> noise) {
  return [eval = b.eval, noise](const Vector& x) { return eval(x, noise.get()); };
}

}  // namespace pcia

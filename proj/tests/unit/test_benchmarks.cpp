#include <doctest.h>

#include <cmath>

#include "pcia/benchmarks.hpp"

using namespace pcia;

TEST_CASE("every catalogued optimum attains the catalogued minimum") {
  for (const Benchmark& b : benchmark_catalog()) {
    const double v = b.eval(b.optimum, nullptr);
    const double tol = b.name == "F8" ? 0.1 : 1e-4;
    INFO(b.name);
    CHECK(std::abs(v - b.minimum) <= tol);
    CHECK(b.space.contains(b.optimum) == (b.name != "F19"));  // F19's table box excludes its optimum
  }
}

TEST_CASE("lookup_function returns table data and rejects unknown names") {
  const Benchmark& f1 = lookup_function("F1");
  CHECK(f1.dim == 30);
  CHECK(f1.space.lower[0] == -100.0);
  CHECK(f1.space.upper[0] == 100.0);
  CHECK(f1.minimum == 0.0);

  const Benchmark& f16 = lookup_function("F16");
  CHECK(f16.dim == 2);
  CHECK(f16.space.lower[0] == -5.0);
  CHECK(f16.minimum == doctest::Approx(-1.0316));

  const Benchmark& f8 = lookup_function("F8");
  CHECK(f8.minimum == doctest::Approx(-418.9829 * 30));

  CHECK_THROWS_WITH_AS(lookup_function("F99"),
                       doctest::Contains("unknown benchmark function 'F99'"), std::invalid_argument);
}

TEST_CASE("hand-checked evaluations") {
  CHECK(eval_benchmark("F1", Vector(30, 0.0)) == 0.0);
  CHECK(std::abs(eval_benchmark("F10", Vector(30, 0.0))) < 1e-12);
  CHECK(eval_benchmark("F11", Vector(30, 0.0)) == 0.0);
  CHECK(eval_benchmark("F16", Vector{0.08984, -0.7126}) == doctest::Approx(-1.0316).epsilon(1e-4));
  CHECK(eval_benchmark("F14", Vector{-32.0, -32.0}) == doctest::Approx(0.998004));
  CHECK(eval_benchmark("F6", Vector(30, 0.4)) == 0.0);  // inside the flat optimum cell
  CHECK(eval_benchmark("F8", Vector(30, 420.9687)) == doctest::Approx(-418.9829 * 30).epsilon(1e-5));
}

TEST_CASE("wrong input dimension is rejected") {
  CHECK_THROWS_AS(eval_benchmark("F1", Vector(7, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(eval_benchmark("F16", Vector(3, 0.0)), std::invalid_argument);
}

TEST_CASE("F7 noise comes from the caller-supplied stream") {
  const Vector x(30, 0.0);
  CHECK(eval_benchmark("F7", x) == 0.0);  // pinned to zero without a stream

  RngStream noise(4);
  const double a = eval_benchmark("F7", x, &noise);
  CHECK(a >= 0.0);
  CHECK(a < 1.0);

  RngStream replay(4);
  CHECK(eval_benchmark("F7", x, &replay) == a);
}

TEST_CASE("functions with known lower bound never dip below it on random points") {
  RngStream rng(2024);
  for (const char* name : {"F1", "F2", "F3", "F4", "F5", "F6", "F9", "F10", "F11", "F12", "F13"}) {
    const Benchmark& b = lookup_function(name);
    double worst = 1e300;
    for (int k = 0; k < 10000; ++k) {
      Vector x(static_cast<std::size_t>(b.dim));
      for (int i = 0; i < b.dim; ++i) x[static_cast<std::size_t>(i)] = rng.uniform(b.space.lower[i], b.space.upper[i]);
      worst = std::min(worst, b.eval(x, nullptr));
    }
    INFO(name);
    CHECK(worst >= b.minimum);
  }
}

#ifndef PCIA_BENCHMARKS_HPP
#define PCIA_BENCHMARKS_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pcia/rng.hpp"
#include "pcia/types.hpp"

namespace pcia {

/// One catalogued test function: bounds, a position attaining the minimum,
/// and the minimum value. The noise stream is consumed only by F7; passing
/// nullptr pins its noise term to zero.
struct Benchmark {
  std::string name;
  int dim;
  SearchSpace space;
  double minimum;
  Vector optimum;
  double (*eval)(std::span<const double>, RngStream*);
};

const std::vector<Benchmark>& benchmark_catalog();

/// Throws std::invalid_argument listing the known names when absent.
const Benchmark& lookup_function(const std::string& name);

bool is_benchmark_name(const std::string& name);

/// Evaluate a catalogued function. Throws on wrong dimension.
double eval_benchmark(const std::string& name, std::span<const double> x, RngStream* noise = nullptr);

/// Wrap a descriptor as an engine objective. The shared stream feeds F7's
/// noise term; one stream per run keeps seeded runs reproducible.
Objective make_objective(const Benchmark& b, std::shared_ptr<RngStream> noise = {});

}  // namespace pcia

#endif  // PCIA_BENCHMARKS_HPP

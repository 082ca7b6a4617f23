#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcia/benchmarks.hpp"
#include "pcia/engine.hpp"
#include "pcia/experiment.hpp"
#include "pcia/transform.hpp"

namespace pcia {

namespace {

// Salt separating the objective-noise stream (F7) from the engine stream of
// the same run.
constexpr std::uint64_t kNoiseSalt = 0x9e3779b97f4a7c15ULL;

struct ResolvedProblem {
  const Benchmark* benchmark = nullptr;
  const ConstrainedProblem* constrained = nullptr;
  SearchSpace space;
  bool maximization = false;
  bool transformed = false;
  Vector shift;
  Matrix rotation;
  double bias = 0.0;
};

ResolvedProblem resolve(const ExperimentConfig& config) {
  ResolvedProblem r;
  if (config.problem.empty()) throw ConfigError("no problem selected");

  if (is_constrained_name(config.problem)) {
    r.constrained = &lookup_constrained(config.problem);
    r.space = r.constrained->space;
    r.maximization = r.constrained->maximization();
    if (!config.rotation_file.empty() || !config.shift_file.empty() || config.bias != 0.0)
      throw ConfigError("shift/rotate/bias wrappers apply to benchmark functions only");
    try {
      config.penalty.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    return r;
  }

  try {
    r.benchmark = &lookup_function(config.problem);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  r.space = r.benchmark->space;

  r.transformed = !config.rotation_file.empty() || !config.shift_file.empty() || config.bias != 0.0;
  if (r.transformed) {
    const int dim = r.benchmark->dim;
    try {
      r.rotation = config.rotation_file.empty() ? identity_matrix(dim)
                                                : load_matrix(config.rotation_file, dim);
      r.shift = config.shift_file.empty() ? Vector(static_cast<std::size_t>(dim), 0.0)
                                          : load_vector(config.shift_file, dim);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    r.bias = config.bias;
  }
  return r;
}

void validate_config(const ExperimentConfig& config) {
  if (config.repeats < 1) throw ConfigError("repeats must be >= 1");
  if (config.threads < 1) throw ConfigError("threads must be >= 1");
  try {
    config.pcia.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Objective run_objective(const ResolvedProblem& problem, const ExperimentConfig& config,
                        std::uint64_t run_seed) {
  if (problem.constrained) return penalized_objective(*problem.constrained, config.penalty);
  auto noise = std::make_shared<RngStream>(run_seed ^ kNoiseSalt);
  if (problem.transformed) {
    TransformedObjective t =
        make_transformed(*problem.benchmark, problem.shift, problem.rotation, problem.bias);
    return [t = std::move(t), noise](const Vector& x) { return t(x, noise.get()); };
  }
  return make_objective(*problem.benchmark, noise);
}

RunResult run_single(const ResolvedProblem& problem, const ExperimentConfig& config, int repeat) {
  PciaConfig pcia = config.pcia;
  pcia.seed = config.base_seed + static_cast<std::uint64_t>(repeat);
  return optimize(run_objective(problem, config, pcia.seed), problem.space, pcia);
}

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<RunResult> run_repeats_serial(const ExperimentConfig& config) {
  validate_config(config);
  const ResolvedProblem problem = resolve(config);
  std::vector<RunResult> results(static_cast<std::size_t>(config.repeats));
  for (int r = 0; r < config.repeats; ++r)
    results[static_cast<std::size_t>(r)] = run_single(problem, config, r);
  return results;
}

std::vector<RunResult> run_repeats_parallel(const ExperimentConfig& config, int threads) {
  validate_config(config);
  const ResolvedProblem problem = resolve(config);
  std::vector<RunResult> results(static_cast<std::size_t>(config.repeats));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(config.repeats));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int r = 0; r < config.repeats; ++r) {
    try {
      results[static_cast<std::size_t>(r)] = run_single(problem, config, r);
    } catch (...) {
      errors[static_cast<std::size_t>(r)] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

void validate_experiment(const ExperimentConfig& config) {
  validate_config(config);
  (void)resolve(config);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  const ResolvedProblem problem = resolve(config);

  std::vector<RunResult> runs = config.threads > 1
                                    ? run_repeats_parallel(config, config.threads)
                                    : run_repeats_serial(config);

  ExperimentReport report;
  report.problem = config.problem;
  report.repeats = config.repeats;
  report.maximization = problem.maximization;

  const double flip = problem.maximization ? -1.0 : 1.0;
  report.final_costs.reserve(runs.size());
  double evals = 0.0, restarts = 0.0;
  for (const RunResult& run : runs) {
    report.final_costs.push_back(flip * run.best.cost);
    evals += static_cast<double>(run.evaluations);
    restarts += run.restarts;
  }

  const double n = static_cast<double>(runs.size());
  double sum = 0.0;
  for (double c : report.final_costs) sum += c;
  report.avg = sum / n;
  double ss = 0.0;
  for (double c : report.final_costs) ss += (c - report.avg) * (c - report.avg);
  report.stddev = (config.sample_std && runs.size() > 1) ? std::sqrt(ss / (n - 1.0)) : std::sqrt(ss / n);

  // "best" is best in the original sense of the problem.
  const auto [lo, hi] = std::minmax_element(report.final_costs.begin(), report.final_costs.end());
  report.best = problem.maximization ? *hi : *lo;
  report.worst = problem.maximization ? *lo : *hi;
  report.mean_evaluations = evals / n;
  report.mean_restarts = restarts / n;
  report.runs = std::move(runs);

  if (!config.trace_dir.empty()) {
    std::filesystem::create_directories(config.trace_dir);
    for (std::size_t r = 0; r < report.runs.size(); ++r) {
      const std::string path =
          config.trace_dir + "/" + config.problem + "_run" + std::to_string(r) + ".csv";
      emit_trace(report.runs[r], path);
    }
  }
  if (!config.report_path.empty()) emit_report(report, config.report_path);
  return report;
}

void emit_report(const ExperimentReport& report, const std::string& path) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write report file '" + path + "'");
  if (fresh) out << "problem,repeats,avg,std,best,worst,mean_evals,mean_restarts\n";
  out << report.problem << ',' << report.repeats << ',' << full_precision(report.avg) << ','
      << full_precision(report.stddev) << ',' << full_precision(report.best) << ','
      << full_precision(report.worst) << ',' << full_precision(report.mean_evaluations) << ','
      << full_precision(report.mean_restarts) << '\n';
  if (!out) throw std::runtime_error("write failed on report file '" + path + "'");
}

void emit_trace(const RunResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace file '" + path + "'");
  out << "iteration,best_cost,evaluations,restart_flag\n";
  for (std::size_t i = 0; i < result.best_cost_trace.size(); ++i)
    out << (i + 1) << ',' << full_precision(result.best_cost_trace[i]) << ','
        << result.evaluations_trace[i] << ',' << static_cast<int>(result.restart_flags[i]) << '\n';
  if (!out) throw std::runtime_error("write failed on trace file '" + path + "'");
}

}  // namespace pcia

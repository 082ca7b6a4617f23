#ifndef PCIA_EXPERIMENT_HPP
#define PCIA_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "pcia/config.hpp"
#include "pcia/constrained.hpp"
#include "pcia/types.hpp"

namespace pcia {

/// Raised for problems detectable before any run starts (unknown problem,
/// unreadable files, invalid parameters). The CLI maps it to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One experiment: `repeats` independent runs of a problem, run r seeded with
/// base_seed + r so every repeat is individually reproducible.
struct ExperimentConfig {
  std::string problem;  // F1..F23 or G1..G13
  PciaConfig pcia;      // per-run seed is derived; the seed field is ignored
  PenaltyConfig penalty;
  int repeats = 30;
  std::uint64_t base_seed = 1;

  std::string report_path;  // append a CSV row here when non-empty
  std::string trace_dir;    // write one trace CSV per run when non-empty

  // Optional shift/rotate/bias wrapper, benchmark problems only.
  std::string rotation_file;
  std::string shift_file;
  double bias = 0.0;

  bool sample_std = false;  // divide by N-1 instead of N
  int threads = 1;          // >1 runs repeats OpenMP-parallel
};

struct ExperimentReport {
  std::string problem;
  int repeats = 0;
  double avg = 0.0;
  double stddev = 0.0;
  double best = 0.0;
  double worst = 0.0;
  double mean_evaluations = 0.0;
  double mean_restarts = 0.0;
  bool maximization = false;
  Vector final_costs;           // reported sense, ordered by repeat index
  std::vector<RunResult> runs;  // full per-run results, ordered by repeat index
};

/// Validate, run all repeats (serial or OpenMP-parallel per config.threads),
/// aggregate, and write the report/traces named in the config. The report is
/// identical whichever execution path ran.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Validation only: resolves the problem, loads any transform files, checks
/// all parameters. Throws ConfigError; runs nothing.
void validate_experiment(const ExperimentConfig& config);

/// The two repeat drivers behind run_experiment. The serial loop is the
/// reference; the parallel one must produce element-wise identical results
/// (both are exercised against each other in the tests and the benchmark
/// tool).
std::vector<RunResult> run_repeats_serial(const ExperimentConfig& config);
std::vector<RunResult> run_repeats_parallel(const ExperimentConfig& config, int threads);

/// Append one CSV row (schema:
/// problem,repeats,avg,std,best,worst,mean_evals,mean_restarts), writing the
/// header only when the file is new or empty.
void emit_report(const ExperimentReport& report, const std::string& path);

/// Write the per-iteration trace CSV (iteration,best_cost,evaluations,
/// restart_flag), one row per iteration.
void emit_trace(const RunResult& result, const std::string& path);

}  // namespace pcia

#endif  // PCIA_EXPERIMENT_HPP

// pcia: CLI for the path-construction optimizer.
//
// Subcommands:
//   list      print the registered problems with dimension, bounds, and the
//             known optimum
//   run       run repeated seeded optimizations and emit a report CSV plus
//             optional per-run convergence traces
//   validate  check a config file / flag set without running anything
//
// Config files are plain key=value lines using the long option names
// (problem=F1, repeats=30, ...); '#' starts a comment and [section] headers
// are allowed for grouping. Command-line flags override file values.
//
// Exit codes: 0 success, 1 configuration error, 2 runtime error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "pcia/benchmarks.hpp"
#include "pcia/constrained.hpp"
#include "pcia/experiment.hpp"

namespace {

struct RunCli {
  pcia::ExperimentConfig cfg;
  std::string config_path;
  // option handles, so file values never override explicit flags
  std::map<std::string, CLI::Option*> options;
  std::map<std::string, bool> given;  // set by flag or by file
  CLI::App* cmd = nullptr;
};

void add_run_options(CLI::App& cmd, RunCli& cli) {
  pcia::ExperimentConfig& cfg = cli.cfg;
  const auto opt = [&](const std::string& name, auto& field, const std::string& help) {
    cli.options[name] = cmd.add_option("--" + name, field, help);
  };

  opt("problem", cfg.problem, "Problem name (F1..F23 or G1..G13)");
  opt("repeats", cfg.repeats, "Independent runs, seeded base_seed + r");
  opt("seed", cfg.base_seed, "Base seed");
  opt("iters", cfg.pcia.max_iters, "Iterations per run");
  opt("pop", cfg.pcia.pop_size, "Population size");
  opt("out", cfg.report_path, "Report CSV path (appends)");
  opt("trace-dir", cfg.trace_dir, "Directory for per-run trace CSVs");
  opt("threads", cfg.threads, "Run repeats in parallel with this many threads");

  opt("rotation", cfg.rotation_file, "Rotation matrix file (dim x dim reals)");
  opt("shift", cfg.shift_file, "Shift vector file (dim reals)");
  opt("bias", cfg.bias, "Additive bias for the transformed objective");

  opt("pc", cfg.penalty.coefficient, "Penalty coefficient for G problems");
  cli.options["alpha"] = cmd.add_option("--alpha", cfg.penalty.alpha, "Penalty exponent (1 or 2)")
                             ->check(CLI::IsMember({1, 2}));
  opt("eq-tol", cfg.penalty.eq_tolerance, "Equality feasibility tolerance");

  opt("refined", cfg.pcia.refined, "Refined offspring per iteration (even)");
  opt("mutants", cfg.pcia.mutants, "Mutant offspring per iteration");
  opt("smoothed", cfg.pcia.smoothed, "Smoothed offspring per iteration");
  opt("crossover-pairs", cfg.pcia.crossover_pairs, "Crossover pairs per iteration");
  opt("mutations", cfg.pcia.mutations, "Mutations per iteration");
  opt("chaos", cfg.pcia.chaos_paths, "Chaos paths per iteration");
  opt("sim-threshold", cfg.pcia.sim_threshold, "Similarity threshold");
  opt("cosine-threshold", cfg.pcia.cosine_threshold, "Crossover gate threshold");
  opt("sigma-fraction", cfg.pcia.sigma_fraction, "Mutation sigma / box width");
  opt("chaos-prob", cfg.pcia.chaos_alter_prob, "Chaos per-element probability");
  opt("smooth-step", cfg.pcia.smooth_fd_step, "Smoothing probe step / range");
  opt("smooth-clamp", cfg.pcia.smooth_clamp, "Smoothing move cap / range");
  opt("restart-window", cfg.pcia.restart_window, "Stagnation window (iterations)");
  opt("restart-threshold", cfg.pcia.restart_threshold, "Relative improvement threshold");
  cli.options["sample-std"] = cmd.add_flag("--sample-std", cfg.sample_std,
                                           "Report the sample (N-1) standard deviation");

  cmd.add_option("--config", cli.config_path, "Read options from a key=value config file");
  cli.cmd = &cmd;
}

// key=value loader; file values apply only where no command-line flag did.
void apply_config_file(RunCli& cli) {
  if (cli.config_path.empty()) return;
  std::ifstream in(cli.config_path);
  if (!in) throw pcia::ConfigError("cannot open config file '" + cli.config_path + "'");

  std::map<std::string, std::string> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') continue;  // cosmetic section header
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw pcia::ConfigError("config file '" + cli.config_path + "' line " +
                              std::to_string(lineno) + ": expected key=value");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (!cli.options.count(key))
      throw pcia::ConfigError("config file '" + cli.config_path + "' line " +
                              std::to_string(lineno) + ": unknown key '" + key + "'");
    values[key] = value;
  }

  // Apply the file values by re-parsing them through the same option set.
  // The second parse clears CLI11's counts, so which-option-was-given lives
  // in cli.given, snapshotted by finalize() before this runs.
  std::vector<std::string> args;
  for (const auto& [key, value] : values) {
    if (cli.given.at(key)) continue;  // flags win
    args.push_back("--" + key + "=" + value);
    cli.given[key] = true;
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    cli.cmd->parse(args);
  } catch (const CLI::ParseError& e) {
    throw pcia::ConfigError("config file '" + cli.config_path + "': " + std::string(e.what()));
  }
}

// Counts default to fractions of the population size; recompute them when
// pop was chosen but the counts were not.
void derive_counts(RunCli& cli) {
  if (!cli.given.at("pop")) return;
  const pcia::PciaConfig derived = pcia::PciaConfig::defaults_for(cli.cfg.pcia.pop_size);
  if (!cli.given.at("refined")) cli.cfg.pcia.refined = derived.refined;
  if (!cli.given.at("mutants")) cli.cfg.pcia.mutants = derived.mutants;
  if (!cli.given.at("smoothed")) cli.cfg.pcia.smoothed = derived.smoothed;
  if (!cli.given.at("crossover-pairs")) cli.cfg.pcia.crossover_pairs = derived.crossover_pairs;
  if (!cli.given.at("mutations")) cli.cfg.pcia.mutations = derived.mutations;
  if (!cli.given.at("chaos")) cli.cfg.pcia.chaos_paths = derived.chaos_paths;
}

void finalize(RunCli& cli) {
  for (const auto& [key, opt] : cli.options) cli.given[key] = opt->count() > 0;
  apply_config_file(cli);
  derive_counts(cli);
}

std::string bounds_text(const pcia::SearchSpace& space) {
  bool uniform = true;
  for (std::size_t i = 1; i < space.lower.size() && uniform; ++i)
    uniform = space.lower[i] == space.lower[0] && space.upper[i] == space.upper[0];
  char buf[64];
  if (uniform)
    std::snprintf(buf, sizeof buf, "[%g, %g]", space.lower[0], space.upper[0]);
  else
    std::snprintf(buf, sizeof buf, "per-dimension");
  return buf;
}

void print_list() {
  std::printf("%-6s %4s  %-16s %s\n", "name", "dim", "bounds", "optimum");
  for (const pcia::Benchmark& b : pcia::benchmark_catalog())
    std::printf("%-6s %4d  %-16s %.6g\n", b.name.c_str(), b.dim, bounds_text(b.space).c_str(),
                b.minimum);
  for (const pcia::ConstrainedProblem& p : pcia::constrained_catalog())
    std::printf("%-6s %4d  %-16s %.6g%s\n", p.name.c_str(), p.space.dim(),
                bounds_text(p.space).c_str(), p.best_known, p.maximization() ? " (max)" : "");
}

void print_summary(const pcia::ExperimentReport& r) {
  std::printf("%s: avg %.6e  std %.6e  best %.6e  worst %.6e  (%d runs, %.1f evals, %.2f restarts)%s\n",
              r.problem.c_str(), r.avg, r.stddev, r.best, r.worst, r.repeats, r.mean_evaluations,
              r.mean_restarts, r.maximization ? " [maximization, original sense]" : "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PCIA global optimizer: benchmark suite, penalty-method constrained problems, "
               "repeated-run experiment harness"};
  app.require_subcommand(1);

  CLI::App* list_cmd = app.add_subcommand("list", "Print the registered problems");

  RunCli run_cli;
  add_run_options(*app.add_subcommand("run", "Run an experiment"), run_cli);

  RunCli check_cli;
  add_run_options(*app.add_subcommand("validate", "Validate configuration without running"), check_cli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (list_cmd->parsed()) {
      print_list();
      return 0;
    }
    if (check_cli.cmd->parsed()) {
      finalize(check_cli);
      pcia::validate_experiment(check_cli.cfg);
      std::printf("configuration OK: problem %s, %d repeats, pop %d, %d iterations\n",
                  check_cli.cfg.problem.c_str(), check_cli.cfg.repeats, check_cli.cfg.pcia.pop_size,
                  check_cli.cfg.pcia.max_iters);
      return 0;
    }
    finalize(run_cli);
    print_summary(pcia::run_experiment(run_cli.cfg));
    return 0;
  } catch (const pcia::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pcia/engine.hpp"
#include "pcia/experiment.hpp"

using namespace pcia;

namespace {

ExperimentConfig quick_config(const std::string& problem, int repeats, int pop, int iters) {
  ExperimentConfig cfg;
  cfg.problem = problem;
  cfg.repeats = repeats;
  cfg.pcia = PciaConfig::defaults_for(pop);
  cfg.pcia.max_iters = iters;
  cfg.base_seed = 100;
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("run_experiment is deterministic and self-consistent") {
  const ExperimentConfig cfg = quick_config("F16", 3, 16, 40);
  const ExperimentReport a = run_experiment(cfg);
  const ExperimentReport b = run_experiment(cfg);

  CHECK(a.final_costs == b.final_costs);
  CHECK(a.avg == b.avg);
  CHECK(a.stddev == b.stddev);

  // avg/std agree with a recomputation from the per-run values.
  double sum = 0.0;
  for (double c : a.final_costs) sum += c;
  const double mean = sum / 3.0;
  double ss = 0.0;
  for (double c : a.final_costs) ss += (c - mean) * (c - mean);
  CHECK(a.avg == doctest::Approx(mean));
  CHECK(a.stddev == doctest::Approx(std::sqrt(ss / 3.0)));

  // Each repeat r is exactly an optimize() run with seed base_seed + r.
  PciaConfig pc = cfg.pcia;
  pc.seed = cfg.base_seed + 2;
  CHECK(a.runs[2].seed == pc.seed);
  CHECK(a.runs[2].best_cost_trace.size() == 40);
}

TEST_CASE("the sample-std switch changes only the estimator") {
  ExperimentConfig cfg = quick_config("F16", 4, 12, 30);
  const ExperimentReport pop_std = run_experiment(cfg);
  cfg.sample_std = true;
  const ExperimentReport samp_std = run_experiment(cfg);
  CHECK(pop_std.final_costs == samp_std.final_costs);
  CHECK(samp_std.stddev == doctest::Approx(pop_std.stddev * std::sqrt(4.0 / 3.0)));
}

TEST_CASE("a single repeat collapses the statistics") {
  const ExperimentReport r = run_experiment(quick_config("F16", 1, 12, 20));
  CHECK(r.avg == r.best);
  CHECK(r.avg == r.worst);
  CHECK(r.stddev == 0.0);
  CHECK(r.final_costs.size() == 1);
}

TEST_CASE("the parallel repeat driver matches the serial reference") {
  ExperimentConfig cfg = quick_config("F9", 4, 12, 30);
  const auto serial = run_repeats_serial(cfg);
  const auto parallel = run_repeats_parallel(cfg, 2);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t r = 0; r < serial.size(); ++r) {
    CHECK(serial[r].best.cost == parallel[r].best.cost);
    CHECK(serial[r].best.position == parallel[r].best.position);
    CHECK(serial[r].best_cost_trace == parallel[r].best_cost_trace);
    CHECK(serial[r].evaluations == parallel[r].evaluations);
  }

  cfg.threads = 2;
  const ExperimentReport threaded = run_experiment(cfg);
  cfg.threads = 1;
  const ExperimentReport plain = run_experiment(cfg);
  CHECK(threaded.final_costs == plain.final_costs);
  CHECK(threaded.avg == plain.avg);
}

TEST_CASE("maximization problems are reported in their original sense") {
  const ExperimentReport r = run_experiment(quick_config("G8", 2, 24, 150));
  CHECK(r.maximization);
  CHECK(r.avg > 0.0);
  CHECK(r.avg <= 0.0959);
  CHECK(r.best >= r.worst);  // best in the original (maximize) sense
}

TEST_CASE("emit_report appends schema rows with one header") {
  const std::string path = temp_path("pcia_report_test.csv");
  std::filesystem::remove(path);

  const ExperimentReport r = run_experiment(quick_config("F16", 2, 12, 20));
  emit_report(r, path);
  emit_report(r, path);

  std::ifstream in(path);
  std::string header, row1, row2, extra;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, row1));
  REQUIRE(std::getline(in, row2));
  CHECK_FALSE(std::getline(in, extra));

  CHECK(header == "problem,repeats,avg,std,best,worst,mean_evals,mean_restarts");
  CHECK(row1 == row2);
  CHECK(row1.rfind("F16,2,", 0) == 0);
  CHECK(std::count(row1.begin(), row1.end(), ',') == 7);
  std::filesystem::remove(path);
}

TEST_CASE("emit_trace reproduces the trace exactly, flags restarts") {
  ExperimentConfig cfg = quick_config("F16", 1, 10, 25);
  cfg.pcia.restart_window = 5;  // provoke restarts within a short run
  const ExperimentReport r = run_experiment(cfg);
  const RunResult& run = r.runs[0];

  const std::string path = temp_path("pcia_trace_test.csv");
  emit_trace(run, path);

  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "iteration,best_cost,evaluations,restart_flag");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string iter_s, cost_s, evals_s, flag_s;
    std::getline(fields, iter_s, ',');
    std::getline(fields, cost_s, ',');
    std::getline(fields, evals_s, ',');
    std::getline(fields, flag_s, ',');
    CHECK(std::stoul(iter_s) == rows + 1);
    CHECK(std::stod(cost_s) == run.best_cost_trace[rows]);  // %.17g round-trips
    CHECK(std::stoull(evals_s) == run.evaluations_trace[rows]);
    CHECK(std::stoi(flag_s) == run.restart_flags[rows]);
    ++rows;
  }
  CHECK(rows == 25);
  std::filesystem::remove(path);
}

TEST_CASE("run_experiment writes traces per run when asked") {
  const std::string dir = temp_path("pcia_trace_dir_test");
  std::filesystem::remove_all(dir);
  ExperimentConfig cfg = quick_config("F16", 2, 10, 8);
  cfg.trace_dir = dir;
  run_experiment(cfg);
  CHECK(std::filesystem::exists(dir + "/F16_run0.csv"));
  CHECK(std::filesystem::exists(dir + "/F16_run1.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("configuration problems fail before any run starts") {
  CHECK_THROWS_AS(run_experiment(quick_config("F99", 2, 10, 5)), ConfigError);
  CHECK_THROWS_AS(run_experiment(quick_config("", 2, 10, 5)), ConfigError);

  ExperimentConfig bad_alpha = quick_config("G1", 2, 10, 5);
  bad_alpha.penalty.alpha = 3;
  CHECK_THROWS_AS(run_experiment(bad_alpha), ConfigError);

  ExperimentConfig missing_matrix = quick_config("F16", 2, 10, 5);
  missing_matrix.rotation_file = "/nonexistent/rotation.txt";
  CHECK_THROWS_AS(run_experiment(missing_matrix), ConfigError);

  ExperimentConfig wrapped_g = quick_config("G1", 2, 10, 5);
  wrapped_g.bias = 5.0;
  CHECK_THROWS_AS(run_experiment(wrapped_g), ConfigError);

  ExperimentConfig no_repeats = quick_config("F16", 0, 10, 5);
  CHECK_THROWS_AS(run_experiment(no_repeats), ConfigError);

  // validate_experiment performs the same checks without running.
  CHECK_THROWS_AS(validate_experiment(bad_alpha), ConfigError);
  CHECK_NOTHROW(validate_experiment(quick_config("F16", 2, 10, 5)));
}

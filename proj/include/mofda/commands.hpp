#pragma once

#include "mofda/csv.hpp"
#include "mofda/metrics.hpp"
#include "mofda/runner.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mofda {

// End-to-end run configuration shared by solve and suite.
struct RunConfig {
    std::string problem_name;
    int n = 100;
    SolverConfig solver;
    int workers = 1;
    std::vector<std::string> endpoints;
    double task_timeout_s = 600.0;
    std::string output_dir = ".";
    bool filter_dominated = false;
    bool emit_trace = false;
    double utopian_shift = 0.0;
    std::optional<Vector> z_star;  // defaults to the benchmark ideal point
    int truth_count = 1000;        // true-front sample size for metrics
    std::vector<std::string> suite_problems;  // suite only; empty = all registered
};

struct SolveOutput {
    ParetoArchive archive;
    MetricReport metrics;
    std::string archive_path;
    std::string metrics_path;
    std::string trace_path;  // empty unless emit_trace
};

// Runs Mo-FDA on one problem and writes archive.csv, metrics.csv (and
// trace.csv with emit_trace) under output_dir.
SolveOutput cmd_solve(const RunConfig& config, std::ostream& out);

// One external algorithm's problems-by-metrics matrix for rank comparison.
struct CompareInput {
    std::string name;
    std::string path;
};

// Runs each suite problem into output_dir/<problem>/, writes a combined
// problems-by-metrics matrix CSV, and with compare inputs emits per-metric
// Friedman rank tables over all algorithms. Returns the number of failed
// problems; the suite continues past failures.
int cmd_suite(const RunConfig& config, const std::vector<CompareInput>& compare,
              std::ostream& out);

void cmd_metrics(const std::string& input_csv, const std::string& problem_name,
                 int truth_count, const std::string& output_path, std::ostream& out);

void cmd_friedman(const std::string& input_csv, RankDirection direction,
                  const std::string& output_path, std::ostream& out);

void cmd_weights(int m, int n, const std::string& output_path, std::ostream& out);

void cmd_pf_true(const std::string& problem_name, int count,
                 const std::string& output_path, std::ostream& out);

// "name  mean (rank)" rows, aligned.
std::string aligned_rank_table(const RankTable& table);

// Canonical key=value description of a run; hashed into output headers.
std::string describe_config(const RunConfig& config);

}  // namespace mofda

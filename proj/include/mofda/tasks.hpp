#pragma once

#include "mofda/scalarization.hpp"
#include "mofda/solver.hpp"

#include <string>
#include <vector>

namespace mofda {

// One scalarized subproblem. task_id equals the weight's index in the
// generated family and is unique within a run.
struct Task {
    int task_id = 0;
    std::string problem_name;
    WeightVector weight;
    ReferencePoint z;
    SolverConfig solver_cfg;
};

struct TaskResult {
    int task_id = 0;
    Vector best_point;   // decision vector, problem space
    Vector objectives;   // re-evaluated from best_point
    double scalar_value = 0.0;
    long evals_used = 0;
    double wall_time = 0.0;  // seconds; informational, never part of archives
    // Improvement trace from the solve; populated only when the task ran
    // in-process with record_trace set. Not part of the wire format.
    std::vector<std::pair<long, double>> trace;
};

// All n task results of one run, ordered by task_id, plus dominance flags.
// Dominated points are flagged, never removed.
struct ParetoArchive {
    std::vector<TaskResult> results;
    std::vector<bool> dominated_flags;
};

// Pareto dominance for minimization; equal vectors do not dominate.
bool dominates(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b);

// Recomputes dominated_flags by a pairwise scan over objectives.
void nondominated_filter(ParetoArchive& archive);

// Runs one scalarized fda_solve in-process.
TaskResult execute_task(const Task& task);

}  // namespace mofda

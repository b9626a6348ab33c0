#pragma once

#include "mofda/geometry.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mofda {

struct SolverConfig {
    int depth_k = 5;               // fractal depth; leaves live at this level
    long eval_budget = 100000;     // counts every objective evaluation, probes included
    double ils_initial_step_ratio = 1.0;  // step0 = ratio * leaf radius
    double ils_step_shrink = 0.5;  // applied after a sweep with no strict improvement
    double ils_min_step = 1e-5;    // stop threshold, relative to step0
    double inflation = kDefaultInflation;  // child radius = inflation * parent radius / 2
    double quality_probe_ratio = 0.5;      // probe offset as a fraction of sphere radius
    bool record_trace = false;

    // Throws std::invalid_argument on out-of-range fields or a budget too
    // small for a single descent (< 2 * dimension * depth_k).
    void validate(int dimension) const;
};

struct SolverResult {
    Vector best_point;  // problem space
    double best_value = std::numeric_limits<double>::infinity();
    long evals_used = 0;
    std::vector<std::pair<long, double>> trace;  // (eval index, best value so far)
};

// Raised by entry points that cannot evaluate a single point.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Budget-accounted objective view over the unit box. Maps unit coordinates
// through the bounds (clamping overhang), counts every evaluation, and keeps
// the running best. evaluate() returns false once the budget is spent.
class BudgetedEvaluator {
public:
    BudgetedEvaluator(ScalarObjective objective, BoxBounds bounds, long budget,
                      bool record_trace = false);

    bool evaluate(const Eigen::Ref<const Vector>& x_unit, double& value);

    long used() const { return used_; }
    bool exhausted() const { return used_ >= budget_; }
    bool has_best() const { return has_best_; }
    double best_value() const { return best_value_; }
    const Vector& best_unit() const { return best_unit_; }

    SolverResult result() const;  // best point mapped to problem space

private:
    ScalarObjective objective_;
    BoxBounds bounds_;
    long budget_ = 0;
    long used_ = 0;
    bool record_trace_ = false;
    bool has_best_ = false;
    double best_value_ = std::numeric_limits<double>::infinity();
    Vector best_unit_;
    Vector best_problem_;
    std::vector<std::pair<long, double>> trace_;
};

// Probes a sphere at its center and at center +- ratio * radius along the
// unit diagonal, consuming up to 3 evaluations. Returns the minimum observed
// value and stores it in s.quality. On budget exhaustion the partial minimum
// (or +inf when nothing could be evaluated) is returned and quality is set
// only if at least one probe ran.
double score_sphere(Hypersphere& s, BudgetedEvaluator& eval, double quality_probe_ratio);

// Per-dimension three-point descent with a shrinking step, operating on the
// shared evaluator. Stops when the step falls below min_step_rel * step0 or
// the budget runs out.
void ils_descent(BudgetedEvaluator& eval, const Eigen::Ref<const Vector>& start_unit,
                 double step0, double step_shrink, double min_step_rel);

// Standalone ILS: evaluates from `start_unit` under its own budget and
// returns the best point found. Throws BudgetExhausted when budget < 1.
SolverResult ils(const Eigen::Ref<const Vector>& start_unit, double step0,
                 const ScalarObjective& objective, const BoxBounds& bounds,
                 long budget, double step_shrink = 0.5, double min_step_rel = 1e-5);

// Test/introspection hooks; both optional.
struct SolveObserver {
    std::function<void(const Hypersphere&)> on_decompose;
    std::function<void(const Hypersphere&)> on_exploit;
};

// Deterministic fractal-decomposition search: best-first descent of the
// sphere tree to depth_k, ILS exploitation in the leaves, backtracking to
// the next-best sphere when a branch is spent. Returns the best point over
// every evaluation made. Budget exhaustion is normal termination.
SolverResult fda_solve(const ScalarObjective& objective, const BoxBounds& bounds,
                       const SolverConfig& cfg, const SolveObserver* observer = nullptr);

}  // namespace mofda

#include "mofda/solver.hpp"

#include <cmath>
#include <set>

namespace mofda {

namespace {

Vector clamp_unit(Vector x) {
    return x.array().max(0.0).min(1.0).matrix();
}

// Best-first ordering: ascending quality, ties by id_path.
struct QualityOrder {
    bool operator()(const Hypersphere& a, const Hypersphere& b) const {
        const double qa = a.quality.value();
        const double qb = b.quality.value();
        if (qa != qb) return qa < qb;
        return id_path_less(a.id_path, b.id_path);
    }
};

using SphereQueue = std::set<Hypersphere, QualityOrder>;

}  // namespace

void SolverConfig::validate(int dimension) const {
    if (dimension < 1) throw std::invalid_argument("solver: dimension must be >= 1");
    if (depth_k < 1) throw std::invalid_argument("solver: depth_k must be >= 1");
    if (!(ils_initial_step_ratio > 0.0 && ils_initial_step_ratio <= 1.0))
        throw std::invalid_argument("solver: ils_initial_step_ratio must be in (0, 1]");
    if (!(ils_step_shrink > 0.0 && ils_step_shrink < 1.0))
        throw std::invalid_argument("solver: ils_step_shrink must be in (0, 1)");
    if (!(ils_min_step > 0.0))
        throw std::invalid_argument("solver: ils_min_step must be positive");
    if (!(inflation > 0.0))
        throw std::invalid_argument("solver: inflation must be positive");
    if (!(quality_probe_ratio > 0.0))
        throw std::invalid_argument("solver: quality_probe_ratio must be positive");
    if (eval_budget < 2L * dimension * depth_k)
        throw std::invalid_argument("solver: eval_budget below one descent (2*D*k)");
}

BudgetedEvaluator::BudgetedEvaluator(ScalarObjective objective, BoxBounds bounds,
                                     long budget, bool record_trace)
    : objective_(std::move(objective)),
      bounds_(std::move(bounds)),
      budget_(budget),
      record_trace_(record_trace) {}

bool BudgetedEvaluator::evaluate(const Eigen::Ref<const Vector>& x_unit, double& value) {
    if (used_ >= budget_) return false;
    Vector y = to_problem_space(x_unit, bounds_);
    const double v = objective_(y);
    ++used_;
    if (!has_best_ || v < best_value_) {
        has_best_ = true;
        best_value_ = v;
        best_unit_ = x_unit;
        best_problem_ = std::move(y);
        if (record_trace_) trace_.emplace_back(used_, v);
    }
    value = v;
    return true;
}

SolverResult BudgetedEvaluator::result() const {
    SolverResult res;
    res.evals_used = used_;
    res.trace = trace_;
    if (has_best_) {
        res.best_point = best_problem_;
        res.best_value = best_value_;
    }
    return res;
}

double score_sphere(Hypersphere& s, BudgetedEvaluator& eval, double quality_probe_ratio) {
    const int dim = s.dimension();
    const double offset = quality_probe_ratio * s.radius / std::sqrt(static_cast<double>(dim));
    double quality = std::numeric_limits<double>::infinity();
    bool any = false;
    double v;
    if (eval.evaluate(s.center, v)) {
        quality = v;
        any = true;
        if (eval.evaluate(s.center.array() + offset, v)) {
            quality = std::min(quality, v);
            if (eval.evaluate(s.center.array() - offset, v))
                quality = std::min(quality, v);
        }
    }
    if (any) s.quality = quality;
    return quality;
}

void ils_descent(BudgetedEvaluator& eval, const Eigen::Ref<const Vector>& start_unit,
                 double step0, double step_shrink, double min_step_rel) {
    const auto dim = start_unit.size();
    Vector current = clamp_unit(start_unit);
    double step = step0;
    const double step_floor = min_step_rel * step0;

    while (step >= step_floor && !eval.exhausted()) {
        bool improved = false;
        for (Eigen::Index d = 0; d < dim; ++d) {
            double v_here, v_plus, v_minus;
            if (!eval.evaluate(current, v_here)) return;
            Vector plus = current;
            plus[d] = std::min(1.0, plus[d] + step);
            if (!eval.evaluate(plus, v_plus)) return;
            Vector minus = current;
            minus[d] = std::max(0.0, minus[d] - step);
            if (!eval.evaluate(minus, v_minus)) return;

            if (v_plus < v_here && v_plus <= v_minus) {
                current = std::move(plus);
                improved = true;
            } else if (v_minus < v_here) {
                current = std::move(minus);
                improved = true;
            }
        }
        if (!improved) step *= step_shrink;
    }
}

SolverResult ils(const Eigen::Ref<const Vector>& start_unit, double step0,
                 const ScalarObjective& objective, const BoxBounds& bounds,
                 long budget, double step_shrink, double min_step_rel) {
    if (!(step0 > 0.0)) throw std::invalid_argument("ils: step0 must be positive");
    BudgetedEvaluator eval(objective, bounds, budget);
    ils_descent(eval, start_unit, step0, step_shrink, min_step_rel);
    if (!eval.has_best()) throw BudgetExhausted("ils: no budget to evaluate the start");
    return eval.result();
}

SolverResult fda_solve(const ScalarObjective& objective, const BoxBounds& bounds,
                       const SolverConfig& cfg, const SolveObserver* observer) {
    const int dim = bounds.dimension();
    cfg.validate(dim);
    BudgetedEvaluator eval(objective, bounds, cfg.eval_budget, cfg.record_trace);

    // levels[l] holds scored spheres of depth l+1 that are still waiting to
    // be decomposed (depth < k) or exploited (depth == k).
    std::vector<SphereQueue> levels(static_cast<std::size_t>(cfg.depth_k));
    auto queue_at = [&levels](int level) -> SphereQueue& {
        return levels[static_cast<std::size_t>(level - 1)];
    };

    auto expand = [&](const Hypersphere& parent) {
        if (observer && observer->on_decompose) observer->on_decompose(parent);
        for (auto& child : decompose(parent, cfg.inflation)) {
            if (eval.exhausted()) return;
            score_sphere(child, eval, cfg.quality_probe_ratio);
            if (child.quality) queue_at(child.level).insert(std::move(child));
        }
    };

    expand(unit_root(dim));

    while (!eval.exhausted()) {
        int deepest = 0;
        for (int l = cfg.depth_k; l >= 1; --l)
            if (!queue_at(l).empty()) {
                deepest = l;
                break;
            }
        if (deepest == 0) break;  // whole tree to depth k exploited

        auto& queue = queue_at(deepest);
        Hypersphere sphere = *queue.begin();
        queue.erase(queue.begin());

        if (deepest == cfg.depth_k) {
            if (observer && observer->on_exploit) observer->on_exploit(sphere);
            ils_descent(eval, sphere.center,
                        cfg.ils_initial_step_ratio * sphere.radius,
                        cfg.ils_step_shrink, cfg.ils_min_step);
        } else {
            expand(sphere);
        }
    }
    return eval.result();
}

}  // namespace mofda

#include "mofda/scalarization.hpp"

#include <stdexcept>

namespace mofda {

double tchebycheff(const Eigen::Ref<const Vector>& f_values, const WeightVector& w,
                   const ReferencePoint& z) {
    if (f_values.size() != w.components.size() || f_values.size() != z.z_star.size())
        throw std::invalid_argument("tchebycheff: dimension mismatch");
    double value = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < f_values.size(); ++i) {
        const double term =
            w.components[i] * (f_values[i] - (z.z_star[i] - z.utopian_shift));
        if (term > value) value = term;
    }
    return value;
}

std::vector<WeightVector> generate_weights(int m, int n) {
    if (n < 2) throw std::invalid_argument("generate_weights: n must be >= 2");
    std::vector<WeightVector> weights;
    weights.reserve(static_cast<std::size_t>(n));
    if (m == 2) {
        for (int i = 0; i < n; ++i) {
            const double a = static_cast<double>(i) / (n - 1);
            weights.push_back({Vector{{a, 1.0 - a}}, i});
        }
    } else if (m == 3) {
        const Matrix lattice = simplex_lattice(n);
        for (int i = 0; i < n; ++i)
            weights.push_back({lattice.row(i).transpose(), i});
    } else {
        throw std::invalid_argument("generate_weights: unsupported objective count " +
                                    std::to_string(m));
    }
    return weights;
}

ScalarObjective scalarize_problem(const BenchmarkProblem& problem,
                                  const WeightVector& w, const ReferencePoint& z) {
    if (problem.num_objectives != w.components.size() ||
        problem.num_objectives != z.z_star.size())
        throw std::invalid_argument("scalarize_problem: dimension mismatch");
    auto eval = problem.evaluate;
    return [eval, w, z](const Vector& x) { return tchebycheff(eval(x), w, z); };
}

}  // namespace mofda

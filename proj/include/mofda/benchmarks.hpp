#pragma once

#include "mofda/geometry.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mofda {

// A registered test problem: pure objective evaluator plus box bounds and
// an analytic optimal-front sampler.
struct BenchmarkProblem {
    std::string name;
    int dimension = 0;       // decision-space dimension
    int num_objectives = 0;  // m
    BoxBounds bounds;
    std::function<Vector(const Vector&)> evaluate;  // checked: throws on bad input
    std::function<Matrix(int count)> sample_front;  // rows = objective vectors
};

struct TrueFront {
    Matrix points;  // one objective vector per row
    std::string problem_name;
};

// Registry lookup; names are lowercase (zdt1..zdt4, zdt6, dtlz1..dtlz3).
// Throws std::invalid_argument on unknown names.
const BenchmarkProblem& problem_by_name(const std::string& name);
const std::vector<std::string>& problem_names();

Vector evaluate(const std::string& name, const Eigen::Ref<const Vector>& x);
TrueFront true_front(const std::string& name, int count);

// Simplex-lattice directions used for three-objective front sampling: the
// smallest H with C(H+2,2) >= count, enumerated lexicographically and
// truncated to count rows. Rows are nonnegative and sum to 1.
Matrix simplex_lattice(int count);

}  // namespace mofda

#pragma once

#include "mofda/benchmarks.hpp"
#include "mofda/geometry.hpp"

#include <vector>

namespace mofda {

// One point on the weight simplex; index is its position in the generated
// family. Components are nonnegative and sum to 1.
struct WeightVector {
    Vector components;
    int index = 0;
};

// Ideal objective vector z*; an optional utopian shift moves it strictly
// below the attainable region.
struct ReferencePoint {
    Vector z_star;
    double utopian_shift = 0.0;

    static ReferencePoint ideal(int m) { return {Vector::Zero(m), 0.0}; }
};

// Weighted Tchebycheff value: max_i w_i * (f_i - (z_i - shift)).
double tchebycheff(const Eigen::Ref<const Vector>& f_values, const WeightVector& w,
                   const ReferencePoint& z);

// Deterministic weight family covering the simplex. m = 2: the n points
// (i/(n-1), 1-i/(n-1)). m = 3: smallest simplex lattice with at least n
// points, truncated lexicographically to exactly n.
std::vector<WeightVector> generate_weights(int m, int n);

// Mono-objective view of a multiobjective problem under one weight vector.
// The returned function takes problem-space points.
ScalarObjective scalarize_problem(const BenchmarkProblem& problem,
                                  const WeightVector& w, const ReferencePoint& z);

}  // namespace mofda

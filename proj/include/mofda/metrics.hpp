#pragma once

#include "mofda/benchmarks.hpp"
#include "mofda/geometry.hpp"

namespace mofda {

struct MetricReport {
    double hypervolume = 0.0;
    double gd = 0.0;
    double igd = 0.0;
    double spread = 0.0;
    Vector reference_point;      // used for the hypervolume term
    bool hv_front_empty = false; // no point strictly inside the reference box
};

// Exact dominated hypervolume of `front` (rows = objective vectors, minimized)
// against reference point `ref`. Points with any component >= the reference
// are discarded first. Supports two objectives (sorted sweep) and three
// (slicing recursion). Returns 0 and sets *empty_after_discard when nothing
// survives the discard.
double hypervolume(const Eigen::Ref<const Matrix>& front,
                   const Eigen::Ref<const Vector>& ref,
                   bool* empty_after_discard = nullptr);

// Mean distance from each approximation point to its nearest truth point.
double gd(const Eigen::Ref<const Matrix>& approx, const Eigen::Ref<const Matrix>& truth);

// Mean distance from each truth point to its nearest approximation point.
double igd(const Eigen::Ref<const Matrix>& approx, const Eigen::Ref<const Matrix>& truth);

// Gap-uniformity indicator. Two objectives: the classic Delta over
// consecutive gaps of the f1-sorted front plus extreme-point distances.
// Three objectives: the generalized form over nearest-neighbor gaps plus
// distances from the truth's per-objective extremes. Requires >= 2 points.
double spread(const Eigen::Ref<const Matrix>& approx, const Eigen::Ref<const Matrix>& truth);

// Default hypervolume reference: truth bounding-box maximum plus 10% of the
// per-objective span.
Vector default_hv_reference(const Eigen::Ref<const Matrix>& truth);

MetricReport compute_metrics(const Eigen::Ref<const Matrix>& approx, const TrueFront& truth,
                             const Vector* hv_ref = nullptr);

}  // namespace mofda

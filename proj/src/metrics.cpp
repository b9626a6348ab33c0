#include "mofda/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mofda {

namespace {

// Exact 2-D hypervolume by a right-to-left staircase sweep. Rows of `pts`
// are (f1, f2) pairs already strictly inside the reference box.
double hv2(std::vector<std::pair<double, double>> pts, double ref1, double ref2) {
    std::sort(pts.begin(), pts.end());
    double volume = 0.0;
    double top = ref2;
    for (const auto& [f1, f2] : pts) {
        if (f2 < top) {
            volume += (ref1 - f1) * (top - f2);
            top = f2;
        }
    }
    return volume;
}

double min_distance_to(const Eigen::Ref<const Matrix>& set,
                       const Eigen::Ref<const Vector>& point) {
    return (set.rowwise() - point.transpose()).rowwise().norm().minCoeff();
}

}  // namespace

double hypervolume(const Eigen::Ref<const Matrix>& front,
                   const Eigen::Ref<const Vector>& ref,
                   bool* empty_after_discard) {
    const auto m = ref.size();
    if (m != 2 && m != 3)
        throw std::invalid_argument("hypervolume: supports 2 or 3 objectives");
    if (front.cols() != m)
        throw std::invalid_argument("hypervolume: front/reference dimension mismatch");

    std::vector<Eigen::Index> inside;
    for (Eigen::Index i = 0; i < front.rows(); ++i)
        if ((front.row(i).transpose().array() < ref.array()).all()) inside.push_back(i);
    if (empty_after_discard) *empty_after_discard = inside.empty();
    if (inside.empty()) return 0.0;

    if (m == 2) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(inside.size());
        for (auto i : inside) pts.emplace_back(front(i, 0), front(i, 1));
        return hv2(std::move(pts), ref[0], ref[1]);
    }

    // m == 3: sort by the third objective and integrate 2-D slices. The slab
    // between consecutive f3 levels is dominated by exactly the points at or
    // below the lower level.
    std::sort(inside.begin(), inside.end(), [&front](Eigen::Index a, Eigen::Index b) {
        if (front(a, 2) != front(b, 2)) return front(a, 2) < front(b, 2);
        if (front(a, 0) != front(b, 0)) return front(a, 0) < front(b, 0);
        return front(a, 1) < front(b, 1);
    });
    double volume = 0.0;
    std::vector<std::pair<double, double>> slice;
    slice.reserve(inside.size());
    for (std::size_t i = 0; i < inside.size(); ++i) {
        slice.emplace_back(front(inside[i], 0), front(inside[i], 1));
        const double level = front(inside[i], 2);
        const double next =
            (i + 1 < inside.size()) ? front(inside[i + 1], 2) : ref[2];
        if (next > level)
            volume += (next - level) * hv2(slice, ref[0], ref[1]);
    }
    return volume;
}

double gd(const Eigen::Ref<const Matrix>& approx, const Eigen::Ref<const Matrix>& truth) {
    if (approx.rows() == 0 || truth.rows() == 0)
        throw std::invalid_argument("gd: empty front");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < approx.rows(); ++i)
        sum += min_distance_to(truth, approx.row(i).transpose());
    return sum / static_cast<double>(approx.rows());
}

double igd(const Eigen::Ref<const Matrix>& approx, const Eigen::Ref<const Matrix>& truth) {
    return gd(truth, approx);
}

double spread(const Eigen::Ref<const Matrix>& approx, const Eigen::Ref<const Matrix>& truth) {
    if (approx.rows() < 2)
        throw std::invalid_argument("spread: needs at least 2 points");
    if (approx.cols() != truth.cols())
        throw std::invalid_argument("spread: dimension mismatch");
    const auto m = approx.cols();
    const auto n = approx.rows();

    if (m == 2) {
        std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        auto lex = [&approx](Eigen::Index a, Eigen::Index b) {
            if (approx(a, 0) != approx(b, 0)) return approx(a, 0) < approx(b, 0);
            return approx(a, 1) < approx(b, 1);
        };
        std::sort(order.begin(), order.end(), lex);

        Eigen::Index t_lo = 0, t_hi = 0;
        for (Eigen::Index i = 1; i < truth.rows(); ++i) {
            if (truth(i, 0) < truth(t_lo, 0)) t_lo = i;
            if (truth(i, 0) > truth(t_hi, 0)) t_hi = i;
        }
        const double d_f =
            (approx.row(order.front()) - truth.row(t_lo)).norm();
        const double d_l =
            (approx.row(order.back()) - truth.row(t_hi)).norm();

        Vector gaps(n - 1);
        for (Eigen::Index i = 0; i + 1 < n; ++i)
            gaps[i] = (approx.row(order[static_cast<std::size_t>(i + 1)]) -
                       approx.row(order[static_cast<std::size_t>(i)]))
                          .norm();
        const double mean = gaps.mean();
        const double deviation = (gaps.array() - mean).abs().sum();
        const double denom = d_f + d_l + static_cast<double>(n - 1) * mean;
        if (denom == 0.0) return 0.0;
        return (d_f + d_l + deviation) / denom;
    }

    // Generalized form: nearest-neighbor gaps within the approximation plus
    // distances from the truth's per-objective extreme points.
    Vector nn(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            best = std::min(best, (approx.row(i) - approx.row(j)).norm());
        }
        nn[i] = best;
    }
    const double mean = nn.mean();
    double extremes = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
        Eigen::Index arg = 0;
        for (Eigen::Index i = 1; i < truth.rows(); ++i)
            if (truth(i, k) > truth(arg, k)) arg = i;
        extremes += min_distance_to(approx, truth.row(arg).transpose());
    }
    const double deviation = (nn.array() - mean).abs().sum();
    const double denom = extremes + static_cast<double>(n) * mean;
    if (denom == 0.0) return 0.0;
    return (extremes + deviation) / denom;
}

Vector default_hv_reference(const Eigen::Ref<const Matrix>& truth) {
    const Vector lo = truth.colwise().minCoeff().transpose();
    const Vector hi = truth.colwise().maxCoeff().transpose();
    return hi + 0.1 * (hi - lo);
}

MetricReport compute_metrics(const Eigen::Ref<const Matrix>& approx, const TrueFront& truth,
                             const Vector* hv_ref) {
    MetricReport report;
    report.reference_point = hv_ref ? *hv_ref : default_hv_reference(truth.points);
    report.hypervolume =
        hypervolume(approx, report.reference_point, &report.hv_front_empty);
    report.gd = gd(approx, truth.points);
    report.igd = igd(approx, truth.points);
    report.spread = spread(approx, truth.points);
    return report;
}

}  // namespace mofda

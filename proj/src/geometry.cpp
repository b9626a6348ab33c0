#include "mofda/geometry.hpp"

#include <stdexcept>

namespace mofda {

bool BoxBounds::contains(const Eigen::Ref<const Vector>& x) const {
    if (x.size() != lower.size()) return false;
    return (x.array() >= lower.array()).all() && (x.array() <= upper.array()).all();
}

BoxBounds BoxBounds::unit(int dim) { return uniform(dim, 0.0, 1.0); }

BoxBounds BoxBounds::uniform(int dim, double lo, double hi) {
    if (dim < 1) throw std::invalid_argument("BoxBounds: dimension must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("BoxBounds: lower must be < upper");
    return BoxBounds{Vector::Constant(dim, lo), Vector::Constant(dim, hi)};
}

Hypersphere unit_root(int dim) {
    if (dim < 1) throw std::invalid_argument("unit_root: dimension must be >= 1");
    Hypersphere root;
    root.center = Vector::Constant(dim, 0.5);
    root.radius = 0.5;
    root.level = 0;
    return root;
}

std::vector<Hypersphere> decompose(const Hypersphere& parent, double inflation) {
    const int dim = parent.dimension();
    const double offset = parent.radius / 2.0;
    const double child_radius = inflation * offset;

    std::vector<Hypersphere> children;
    children.reserve(2 * static_cast<std::size_t>(dim));
    for (int j = 0; j < 2 * dim; ++j) {
        const int axis = j / 2;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        Hypersphere child;
        child.center = parent.center;
        child.center[axis] += sign * offset;
        child.radius = child_radius;
        child.level = parent.level + 1;
        child.id_path = parent.id_path;
        child.id_path.push_back(j);
        children.push_back(std::move(child));
    }
    return children;
}

Vector to_problem_space(const Eigen::Ref<const Vector>& x_unit,
                        const BoxBounds& bounds) {
    if (x_unit.size() != bounds.lower.size())
        throw std::invalid_argument("to_problem_space: dimension mismatch");
    const auto clamped = x_unit.array().max(0.0).min(1.0);
    return bounds.lower.array() + clamped * (bounds.upper.array() - bounds.lower.array());
}

bool id_path_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace mofda

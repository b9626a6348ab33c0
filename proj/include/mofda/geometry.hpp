#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

namespace mofda {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Scalar objective over problem-space decision vectors.
using ScalarObjective = std::function<double(const Vector&)>;

inline constexpr double kDefaultInflation = 1.75;

// Axis-aligned box constraints in problem space.
struct BoxBounds {
    Vector lower;
    Vector upper;

    int dimension() const { return static_cast<int>(lower.size()); }
    bool contains(const Eigen::Ref<const Vector>& x) const;

    static BoxBounds unit(int dim);
    static BoxBounds uniform(int dim, double lo, double hi);
};

// A search region: ball in unit-box coordinates plus its position in the
// decomposition tree. id_path is the sequence of child indices from the
// root and doubles as a deterministic identity (its length equals level).
struct Hypersphere {
    Vector center;
    double radius = 0.0;
    int level = 0;
    std::optional<double> quality;  // lower is better; unset until scored
    std::vector<int> id_path;

    int dimension() const { return static_cast<int>(center.size()); }
};

// Root sphere inscribed in the unit box [0,1]^dim. Throws on dim < 1.
Hypersphere unit_root(int dim);

// Splits a sphere into 2*dim children, two per axis at offset radius/2 from
// the parent center. Child j covers axis j/2, positive side for even j.
// Child radius is inflation * radius / 2. Ordering by j is part of the
// contract: equal parents always produce componentwise-equal sequences.
std::vector<Hypersphere> decompose(const Hypersphere& parent,
                                   double inflation = kDefaultInflation);

// Affine map from unit-box coordinates to problem space. Components are
// clamped to [0,1] first so sphere overhang never leaves the bounds.
Vector to_problem_space(const Eigen::Ref<const Vector>& x_unit,
                        const BoxBounds& bounds);

// Lexicographic order on tree paths; the deterministic tie-breaker used
// whenever two spheres have equal quality.
bool id_path_less(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace mofda

#include "mofda/benchmarks.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace mofda {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vector checked(const std::string& name, const BoxBounds& bounds,
               const Eigen::Ref<const Vector>& x) {
    if (x.size() != bounds.lower.size())
        throw std::domain_error(name + ": expected " +
                                std::to_string(bounds.lower.size()) +
                                " decision variables, got " + std::to_string(x.size()));
    if (!bounds.contains(x))
        throw std::domain_error(name + ": point outside bounds");
    return x;
}

double zdt_g(const Eigen::Ref<const Vector>& x) {
    const auto n = x.size();
    return 1.0 + 9.0 * x.tail(n - 1).sum() / static_cast<double>(n - 1);
}

Vector zdt1_eval(const Eigen::Ref<const Vector>& x) {
    const double f1 = x[0];
    const double g = zdt_g(x);
    return Vector{{f1, g * (1.0 - std::sqrt(f1 / g))}};
}

Vector zdt2_eval(const Eigen::Ref<const Vector>& x) {
    const double f1 = x[0];
    const double g = zdt_g(x);
    const double r = f1 / g;
    return Vector{{f1, g * (1.0 - r * r)}};
}

Vector zdt3_eval(const Eigen::Ref<const Vector>& x) {
    const double f1 = x[0];
    const double g = zdt_g(x);
    const double r = f1 / g;
    return Vector{{f1, g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f1))}};
}

Vector zdt4_eval(const Eigen::Ref<const Vector>& x) {
    const auto n = x.size();
    const double f1 = x[0];
    double g = 1.0 + 10.0 * static_cast<double>(n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
        g += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
    return Vector{{f1, g * (1.0 - std::sqrt(f1 / g))}};
}

Vector zdt6_eval(const Eigen::Ref<const Vector>& x) {
    const auto n = x.size();
    const double s = std::sin(6.0 * kPi * x[0]);
    const double f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(s, 6);
    const double g =
        1.0 + 9.0 * std::pow(x.tail(n - 1).sum() / static_cast<double>(n - 1), 0.25);
    const double r = f1 / g;
    return Vector{{f1, g * (1.0 - r * r)}};
}

double dtlz1_g(const Eigen::Ref<const Vector>& x, int m) {
    const auto n = x.size();
    double s = 0.0;
    for (Eigen::Index i = m - 1; i < n; ++i) {
        const double d = x[i] - 0.5;
        s += d * d - std::cos(20.0 * kPi * d);
    }
    return 100.0 * (static_cast<double>(n - m + 1) + s);
}

double dtlz2_g(const Eigen::Ref<const Vector>& x, int m) {
    const auto n = x.size();
    double s = 0.0;
    for (Eigen::Index i = m - 1; i < n; ++i) {
        const double d = x[i] - 0.5;
        s += d * d;
    }
    return s;
}

Vector dtlz1_eval(const Eigen::Ref<const Vector>& x) {
    const double g = dtlz1_g(x, 3);
    const double h = 0.5 * (1.0 + g);
    return Vector{{h * x[0] * x[1], h * x[0] * (1.0 - x[1]), h * (1.0 - x[0])}};
}

Vector dtlz_sphere_eval(const Eigen::Ref<const Vector>& x, double g) {
    const double a = x[0] * kPi / 2.0;
    const double b = x[1] * kPi / 2.0;
    const double h = 1.0 + g;
    return Vector{{h * std::cos(a) * std::cos(b), h * std::cos(a) * std::sin(b),
                   h * std::sin(a)}};
}

// Minimum of the ZDT6 first objective over x1 in [0,1]; fixes the reduced
// f1 range of its optimal front. Computed once, deterministically.
double zdt6_f1_min() {
    static const double value = [] {
        auto f1 = [](double x) {
            const double s = std::sin(6.0 * kPi * x);
            return 1.0 - std::exp(-4.0 * x) * std::pow(s, 6);
        };
        const int grid = 20000;
        double best_x = 0.0, best = f1(0.0);
        for (int i = 1; i <= grid; ++i) {
            const double x = static_cast<double>(i) / grid;
            const double v = f1(x);
            if (v < best) { best = v; best_x = x; }
        }
        double lo = std::max(0.0, best_x - 1.0 / grid);
        double hi = std::min(1.0, best_x + 1.0 / grid);
        for (int it = 0; it < 200; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (f1(m1) < f1(m2)) hi = m2; else lo = m1;
        }
        return f1((lo + hi) / 2.0);
    }();
    return value;
}

Matrix front_zdt1_shape(int count) {
    // Sampled via t = sqrt(f1), so the second objective is evenly spaced.
    Matrix pts(count, 2);
    for (int i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / (count - 1);
        pts(i, 0) = t * t;
        pts(i, 1) = 1.0 - t;
    }
    return pts;
}

Matrix front_zdt2(int count) {
    Matrix pts(count, 2);
    for (int i = 0; i < count; ++i) {
        const double f1 = static_cast<double>(i) / (count - 1);
        pts(i, 0) = f1;
        pts(i, 1) = 1.0 - f1 * f1;
    }
    return pts;
}

Matrix front_zdt3(int count) {
    // Dense sample of the analytic curve, dominated points filtered, then
    // downsampled to count rows. The curve's f1 is increasing across samples,
    // so a point survives iff its f2 is strictly below the running minimum.
    const int dense = std::max(10000, 50 * count);
    std::vector<std::pair<double, double>> keep;
    keep.reserve(static_cast<std::size_t>(dense) / 4);
    double best_f2 = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= dense; ++i) {
        const double f1 = static_cast<double>(i) / dense;
        const double f2 = 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1);
        if (f2 < best_f2) {
            keep.emplace_back(f1, f2);
            best_f2 = f2;
        }
    }
    Matrix pts(count, 2);
    const auto last = static_cast<double>(keep.size() - 1);
    for (int i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(
            std::llround(last * static_cast<double>(i) / (count - 1)));
        pts(i, 0) = keep[idx].first;
        pts(i, 1) = keep[idx].second;
    }
    return pts;
}

Matrix front_zdt6(int count) {
    const double f1_min = zdt6_f1_min();
    Matrix pts(count, 2);
    for (int i = 0; i < count; ++i) {
        const double f1 =
            f1_min + (1.0 - f1_min) * static_cast<double>(i) / (count - 1);
        pts(i, 0) = f1;
        pts(i, 1) = 1.0 - f1 * f1;
    }
    return pts;
}

Matrix front_dtlz1(int count) { return 0.5 * simplex_lattice(count); }

Matrix front_dtlz_sphere(int count) {
    Matrix dirs = simplex_lattice(count);
    for (Eigen::Index i = 0; i < dirs.rows(); ++i)
        dirs.row(i) /= dirs.row(i).norm();
    return dirs;
}

std::vector<BenchmarkProblem> build_registry() {
    std::vector<BenchmarkProblem> reg;
    auto add = [&reg](std::string name, int dim, int m, BoxBounds bounds,
                      Vector (*raw)(const Eigen::Ref<const Vector>&),
                      Matrix (*front)(int)) {
        BenchmarkProblem p;
        p.name = name;
        p.dimension = dim;
        p.num_objectives = m;
        p.bounds = bounds;
        p.evaluate = [name, bounds, raw](const Vector& x) {
            return raw(checked(name, bounds, x));
        };
        p.sample_front = front;
        reg.push_back(std::move(p));
    };

    add("zdt1", 30, 2, BoxBounds::unit(30), zdt1_eval, front_zdt1_shape);
    add("zdt2", 30, 2, BoxBounds::unit(30), zdt2_eval, front_zdt2);
    add("zdt3", 30, 2, BoxBounds::unit(30), zdt3_eval, front_zdt3);

    BoxBounds zdt4_bounds = BoxBounds::uniform(10, -5.0, 5.0);
    zdt4_bounds.lower[0] = 0.0;
    zdt4_bounds.upper[0] = 1.0;
    add("zdt4", 10, 2, zdt4_bounds, zdt4_eval, front_zdt1_shape);

    add("zdt6", 10, 2, BoxBounds::unit(10), zdt6_eval, front_zdt6);

    add("dtlz1", 7, 3, BoxBounds::unit(7), dtlz1_eval, front_dtlz1);
    add("dtlz2", 12, 3, BoxBounds::unit(12),
        [](const Eigen::Ref<const Vector>& x) {
            return dtlz_sphere_eval(x, dtlz2_g(x, 3));
        },
        front_dtlz_sphere);
    add("dtlz3", 12, 3, BoxBounds::unit(12),
        [](const Eigen::Ref<const Vector>& x) {
            return dtlz_sphere_eval(x, dtlz1_g(x, 3));
        },
        front_dtlz_sphere);
    return reg;
}

const std::vector<BenchmarkProblem>& registry() {
    static const std::vector<BenchmarkProblem> reg = build_registry();
    return reg;
}

}  // namespace

Matrix simplex_lattice(int count) {
    if (count < 2) throw std::invalid_argument("simplex_lattice: count must be >= 2");
    int h = 1;
    while ((h + 1) * (h + 2) / 2 < count) ++h;
    Matrix pts(count, 3);
    int row = 0;
    for (int a = 0; a <= h && row < count; ++a)
        for (int b = 0; a + b <= h && row < count; ++b) {
            const int c = h - a - b;
            pts(row, 0) = static_cast<double>(a) / h;
            pts(row, 1) = static_cast<double>(b) / h;
            pts(row, 2) = static_cast<double>(c) / h;
            ++row;
        }
    return pts;
}

const BenchmarkProblem& problem_by_name(const std::string& name) {
    for (const auto& p : registry())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown problem: " + name);
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& p : registry()) out.push_back(p.name);
        return out;
    }();
    return names;
}

Vector evaluate(const std::string& name, const Eigen::Ref<const Vector>& x) {
    return problem_by_name(name).evaluate(x);
}

TrueFront true_front(const std::string& name, int count) {
    if (count < 2) throw std::invalid_argument("true_front: count must be >= 2");
    const auto& p = problem_by_name(name);
    return TrueFront{p.sample_front(count), p.name};
}

}  // namespace mofda

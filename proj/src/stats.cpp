#include "mofda/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace mofda {

namespace {

// Regularized upper incomplete gamma Q(a, x); series / continued fraction
// split at x = a + 1.
double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    double b = x + 1.0 - a;
    double c = 1e300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

double chi_squared_survival(double statistic, int dof) {
    if (dof < 1) return 1.0;
    return gamma_q(dof / 2.0, statistic / 2.0);
}

// Average-tie ranks of one column; 1 is best under the given direction.
Vector column_ranks(const Eigen::Ref<const Vector>& column, RankDirection direction) {
    const auto n = column.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return direction == RankDirection::minimize ? column[a] < column[b]
                                                    : column[a] > column[b];
    });
    Vector ranks(n);
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i;
        while (j + 1 < n && column[order[static_cast<std::size_t>(j + 1)]] ==
                                column[order[static_cast<std::size_t>(i)]])
            ++j;
        const double shared = static_cast<double>(i + j) / 2.0 + 1.0;
        for (Eigen::Index t = i; t <= j; ++t)
            ranks[order[static_cast<std::size_t>(t)]] = shared;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

RankTable friedman_ranks(const Matrix& values, RankDirection direction,
                         std::vector<std::string> algorithms,
                         std::vector<std::string> functions) {
    const auto n_alg = values.rows();
    const auto n_fun = values.cols();
    if (n_alg < 1 || n_fun < 1)
        throw std::invalid_argument("friedman_ranks: empty matrix");
    if (!values.allFinite())
        throw std::invalid_argument("friedman_ranks: incomplete data (non-finite cell)");
    if (!algorithms.empty() && static_cast<Eigen::Index>(algorithms.size()) != n_alg)
        throw std::invalid_argument("friedman_ranks: algorithm name count mismatch");
    if (!functions.empty() && static_cast<Eigen::Index>(functions.size()) != n_fun)
        throw std::invalid_argument("friedman_ranks: function name count mismatch");

    RankTable table;
    table.direction = direction;
    table.values = values;
    if (algorithms.empty())
        for (Eigen::Index i = 0; i < n_alg; ++i)
            algorithms.push_back("alg" + std::to_string(i));
    if (functions.empty())
        for (Eigen::Index j = 0; j < n_fun; ++j)
            functions.push_back("f" + std::to_string(j));
    table.algorithms = std::move(algorithms);
    table.functions = std::move(functions);

    table.ranks.resize(n_alg, n_fun);
    for (Eigen::Index j = 0; j < n_fun; ++j)
        table.ranks.col(j) = column_ranks(values.col(j), direction);
    table.mean_ranks = table.ranks.rowwise().mean();

    table.global_ranks.resize(static_cast<std::size_t>(n_alg));
    for (Eigen::Index i = 0; i < n_alg; ++i) {
        int smaller = 0;
        for (Eigen::Index j = 0; j < n_alg; ++j)
            if (table.mean_ranks[j] < table.mean_ranks[i]) ++smaller;
        table.global_ranks[static_cast<std::size_t>(i)] = smaller + 1;
    }

    // Friedman chi-squared from rank sums; reported alongside the ranks.
    const double k = static_cast<double>(n_alg);
    const double n = static_cast<double>(n_fun);
    if (n_alg > 1) {
        double sum_sq = 0.0;
        for (Eigen::Index i = 0; i < n_alg; ++i) {
            const double r = table.ranks.row(i).sum();
            sum_sq += r * r;
        }
        table.friedman_statistic =
            12.0 / (n * k * (k + 1.0)) * sum_sq - 3.0 * n * (k + 1.0);
        table.friedman_p_value =
            chi_squared_survival(table.friedman_statistic, static_cast<int>(n_alg) - 1);
    }
    return table;
}

std::string rank_cell(double mean_rank, int global_rank) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f (%d)", mean_rank, global_rank);
    return buf;
}

std::vector<std::string> report(const RankTable& table) {
    std::vector<std::string> rows;
    rows.reserve(table.algorithms.size());
    for (std::size_t i = 0; i < table.algorithms.size(); ++i)
        rows.push_back(table.algorithms[i] + " " +
                       rank_cell(table.mean_ranks[static_cast<Eigen::Index>(i)],
                                 table.global_ranks[i]));
    return rows;
}

}  // namespace mofda

#pragma once

#include "mofda/geometry.hpp"

#include <string>
#include <vector>

namespace mofda {

enum class RankDirection { minimize, maximize };

// Friedman rank aggregation of a complete algorithms-by-functions value
// matrix. ranks holds per-function ranks (1 = best, ties averaged);
// global_ranks orders the mean ranks with ties sharing the smaller rank.
struct RankTable {
    std::vector<std::string> algorithms;
    std::vector<std::string> functions;
    Matrix values;  // algorithms x functions
    RankDirection direction = RankDirection::minimize;
    Matrix ranks;   // same shape as values
    Vector mean_ranks;
    std::vector<int> global_ranks;
    double friedman_statistic = 0.0;  // chi-squared, k-1 degrees of freedom
    double friedman_p_value = 1.0;
};

// Throws std::invalid_argument on an empty or incomplete (non-finite) matrix.
RankTable friedman_ranks(const Matrix& values, RankDirection direction,
                         std::vector<std::string> algorithms = {},
                         std::vector<std::string> functions = {});

// "1.875 (1)"-style cell: three-decimal mean rank plus global rank.
std::string rank_cell(double mean_rank, int global_rank);

// One "name mean (rank)" row per algorithm.
std::vector<std::string> report(const RankTable& table);

}  // namespace mofda

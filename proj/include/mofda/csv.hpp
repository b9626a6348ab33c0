#pragma once

#include "mofda/metrics.hpp"
#include "mofda/stats.hpp"
#include "mofda/tasks.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mofda::csv {

// Shortest decimal form that round-trips the exact double.
std::string format_double(double value);

// FNV-1a over the canonical config string; keeps output headers stable.
std::uint64_t fnv1a(const std::string& text);
std::string hash_hex(const std::string& text);

// Leading "# ..." header comment lines: tool version plus caller-supplied
// key=value context (config hash, metric conventions).
std::string header_comment(const std::vector<std::string>& context_lines);

// Archive table: task_id, w_1..w_m, x_1..x_D, f_1..f_m, scalar_value,
// dominated. Weights come from the task family (one per result, by index).
// With filter_dominated, dominated rows are omitted.
std::string archive_csv(const ParetoArchive& archive,
                        const std::vector<WeightVector>& weights,
                        const std::vector<std::string>& context_lines,
                        bool filter_dominated = false);

// metric,value rows.
std::string metrics_csv(const MetricReport& report,
                        const std::vector<std::string>& context_lines);

// index, w_1..w_m rows.
std::string weights_csv(const std::vector<WeightVector>& weights,
                        const std::vector<std::string>& context_lines);

// f_1..f_m rows.
std::string front_csv(const Eigen::Ref<const Matrix>& points,
                      const std::vector<std::string>& context_lines);

// task_id, eval_index, best_value rows for every result carrying a trace.
std::string trace_csv(const ParetoArchive& archive,
                      const std::vector<std::string>& context_lines);

// algorithm, mean_rank, global_rank rows plus per-function ranks.
std::string rank_table_csv(const RankTable& table,
                           const std::vector<std::string>& context_lines);

// Reads an objective-vector table: '#' comments skipped; a header row is
// detected and f_* columns selected when present, otherwise every column is
// an objective.
Matrix read_front_csv(const std::string& path);

// Reads an algorithms-by-functions value matrix with a header row of
// function names and a leading name column.
struct NamedMatrix {
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;
    Matrix values;
};
NamedMatrix read_named_matrix(const std::string& path);

void write_file(const std::string& path, const std::string& content);

}  // namespace mofda::csv

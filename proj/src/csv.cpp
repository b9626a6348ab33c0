#include "mofda/csv.hpp"

#include "mofda/version.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mofda::csv {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, sep)) cells.push_back(cell);
    if (!line.empty() && line.back() == sep) cells.emplace_back();
    return cells;
}

bool parse_cell(const std::string& cell, double& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{}) return false;
    while (ptr != last && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
    return ptr == last;
}

std::vector<std::string> read_data_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

std::string format_double(double value) {
    char buf[48];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (const unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string hash_hex(const std::string& text) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(text)));
    return buf;
}

std::string header_comment(const std::vector<std::string>& context_lines) {
    std::string out = std::string("# mofda ") + kVersion + "\n";
    for (const auto& line : context_lines) out += "# " + line + "\n";
    return out;
}

std::string archive_csv(const ParetoArchive& archive,
                        const std::vector<WeightVector>& weights,
                        const std::vector<std::string>& context_lines,
                        bool filter_dominated) {
    if (archive.results.size() != weights.size())
        throw std::invalid_argument("archive_csv: weight/result count mismatch");
    const auto m = archive.results.empty() ? 0 : archive.results.front().objectives.size();
    const auto dim = archive.results.empty() ? 0 : archive.results.front().best_point.size();

    std::string out = header_comment(context_lines);
    out += "task_id";
    for (Eigen::Index j = 0; j < m; ++j) out += ",w_" + std::to_string(j + 1);
    for (Eigen::Index j = 0; j < dim; ++j) out += ",x_" + std::to_string(j + 1);
    for (Eigen::Index j = 0; j < m; ++j) out += ",f_" + std::to_string(j + 1);
    out += ",scalar_value,dominated\n";

    for (std::size_t i = 0; i < archive.results.size(); ++i) {
        const bool dominated =
            i < archive.dominated_flags.size() && archive.dominated_flags[i];
        if (filter_dominated && dominated) continue;
        const auto& r = archive.results[i];
        out += std::to_string(r.task_id);
        for (Eigen::Index j = 0; j < m; ++j)
            out += "," + format_double(weights[i].components[j]);
        for (Eigen::Index j = 0; j < dim; ++j)
            out += "," + format_double(r.best_point[j]);
        for (Eigen::Index j = 0; j < m; ++j)
            out += "," + format_double(r.objectives[j]);
        out += "," + format_double(r.scalar_value);
        out += dominated ? ",1\n" : ",0\n";
    }
    return out;
}

std::string metrics_csv(const MetricReport& report,
                        const std::vector<std::string>& context_lines) {
    std::string out = header_comment(context_lines);
    out += "metric,value\n";
    out += "hypervolume," + format_double(report.hypervolume) + "\n";
    out += "gd," + format_double(report.gd) + "\n";
    out += "igd," + format_double(report.igd) + "\n";
    out += "spread," + format_double(report.spread) + "\n";
    return out;
}

std::string weights_csv(const std::vector<WeightVector>& weights,
                        const std::vector<std::string>& context_lines) {
    std::string out = header_comment(context_lines);
    const auto m = weights.empty() ? 0 : weights.front().components.size();
    out += "index";
    for (Eigen::Index j = 0; j < m; ++j) out += ",w_" + std::to_string(j + 1);
    out += "\n";
    for (const auto& w : weights) {
        out += std::to_string(w.index);
        for (Eigen::Index j = 0; j < m; ++j) out += "," + format_double(w.components[j]);
        out += "\n";
    }
    return out;
}

std::string front_csv(const Eigen::Ref<const Matrix>& points,
                      const std::vector<std::string>& context_lines) {
    std::string out = header_comment(context_lines);
    for (Eigen::Index j = 0; j < points.cols(); ++j)
        out += (j == 0 ? "f_" : ",f_") + std::to_string(j + 1);
    out += "\n";
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        for (Eigen::Index j = 0; j < points.cols(); ++j) {
            if (j > 0) out += ",";
            out += format_double(points(i, j));
        }
        out += "\n";
    }
    return out;
}

std::string trace_csv(const ParetoArchive& archive,
                      const std::vector<std::string>& context_lines) {
    std::string out = header_comment(context_lines);
    out += "task_id,eval_index,best_value\n";
    for (const auto& r : archive.results)
        for (const auto& [index, value] : r.trace)
            out += std::to_string(r.task_id) + "," + std::to_string(index) + "," +
                   format_double(value) + "\n";
    return out;
}

std::string rank_table_csv(const RankTable& table,
                           const std::vector<std::string>& context_lines) {
    std::string out = header_comment(context_lines);
    out += "algorithm";
    for (const auto& f : table.functions) out += ",rank_" + f;
    out += ",mean_rank,global_rank\n";
    for (std::size_t i = 0; i < table.algorithms.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        out += table.algorithms[i];
        for (Eigen::Index j = 0; j < table.ranks.cols(); ++j)
            out += "," + format_double(table.ranks(row, j));
        out += "," + format_double(table.mean_ranks[row]);
        out += "," + std::to_string(table.global_ranks[i]) + "\n";
    }
    return out;
}

Matrix read_front_csv(const std::string& path) {
    const auto lines = read_data_lines(path);
    if (lines.empty()) throw std::runtime_error("'" + path + "': no data rows");

    const auto first = split(lines.front(), ',');
    std::vector<int> columns;
    double probe;
    bool has_header = false;
    for (const auto& cell : first)
        if (!parse_cell(cell, probe)) {
            has_header = true;
            break;
        }
    std::size_t start = 0;
    if (has_header) {
        for (std::size_t j = 0; j < first.size(); ++j)
            if (first[j].rfind("f_", 0) == 0) columns.push_back(static_cast<int>(j));
        if (columns.empty())
            throw std::runtime_error("'" + path + "': header has no f_* columns");
        start = 1;
    } else {
        for (std::size_t j = 0; j < first.size(); ++j)
            columns.push_back(static_cast<int>(j));
    }

    const auto rows = lines.size() - start;
    if (rows == 0) throw std::runtime_error("'" + path + "': no data rows");
    Matrix points(rows, columns.size());
    for (std::size_t i = 0; i < rows; ++i) {
        const auto cells = split(lines[i + start], ',');
        for (std::size_t j = 0; j < columns.size(); ++j) {
            const auto col = static_cast<std::size_t>(columns[j]);
            if (col >= cells.size() || !parse_cell(cells[col], probe))
                throw std::runtime_error("'" + path + "': bad value at row " +
                                         std::to_string(i + 1));
            points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = probe;
        }
    }
    return points;
}

NamedMatrix read_named_matrix(const std::string& path) {
    const auto lines = read_data_lines(path);
    if (lines.size() < 2)
        throw std::runtime_error("'" + path + "': expected a header row and data rows");
    NamedMatrix out;
    const auto header = split(lines.front(), ',');
    if (header.size() < 2)
        throw std::runtime_error("'" + path + "': expected name column plus values");
    out.col_names.assign(header.begin() + 1, header.end());

    const auto rows = lines.size() - 1;
    out.values.resize(static_cast<Eigen::Index>(rows),
                      static_cast<Eigen::Index>(out.col_names.size()));
    for (std::size_t i = 0; i < rows; ++i) {
        const auto cells = split(lines[i + 1], ',');
        if (cells.size() != header.size())
            throw std::runtime_error("'" + path + "': ragged row " + std::to_string(i + 2));
        out.row_names.push_back(cells.front());
        for (std::size_t j = 1; j < cells.size(); ++j) {
            double v;
            if (!parse_cell(cells[j], v))
                throw std::runtime_error("'" + path + "': bad value '" + cells[j] + "'");
            out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j - 1)) = v;
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace mofda::csv

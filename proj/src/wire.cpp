#include "mofda/wire.hpp"

#include <json.hpp>

namespace mofda::wire {

namespace {

using nlohmann::json;

json to_json(const Eigen::Ref<const Vector>& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Vector vector_from(const json& arr, const char* field) {
    if (!arr.is_array()) throw WireError(std::string(field) + ": expected array");
    Vector v(arr.size());
    Eigen::Index i = 0;
    for (const auto& x : arr) {
        if (!x.is_number()) throw WireError(std::string(field) + ": expected numbers");
        v[i++] = x.get<double>();
    }
    return v;
}

const json& require(const json& j, const char* field) {
    const auto it = j.find(field);
    if (it == j.end()) throw WireError(std::string("missing field '") + field + "'");
    return *it;
}

json parse(const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw WireError("malformed record: not valid JSON");
    if (!j.is_object()) throw WireError("malformed record: expected an object");
    if (require(j, "v").get<int>() != kProtocolVersion)
        throw WireError("unsupported protocol version");
    return j;
}

}  // namespace

std::string encode_task(const Task& task) {
    json j;
    j["v"] = kProtocolVersion;
    j["task_id"] = task.task_id;
    j["problem_name"] = task.problem_name;
    j["weight"] = {{"components", to_json(task.weight.components)},
                   {"index", task.weight.index}};
    j["z"] = {{"z_star", to_json(task.z.z_star)},
              {"utopian_shift", task.z.utopian_shift}};
    j["solver_cfg"] = {{"depth_k", task.solver_cfg.depth_k},
                       {"eval_budget", task.solver_cfg.eval_budget},
                       {"ils_initial_step_ratio", task.solver_cfg.ils_initial_step_ratio},
                       {"ils_step_shrink", task.solver_cfg.ils_step_shrink},
                       {"ils_min_step", task.solver_cfg.ils_min_step},
                       {"inflation", task.solver_cfg.inflation},
                       {"quality_probe_ratio", task.solver_cfg.quality_probe_ratio}};
    return j.dump();
}

std::string encode_result(const TaskResult& result) {
    json j;
    j["v"] = kProtocolVersion;
    j["task_id"] = result.task_id;
    j["best_point"] = to_json(result.best_point);
    j["objectives"] = to_json(result.objectives);
    j["scalar_value"] = result.scalar_value;
    j["evals_used"] = result.evals_used;
    j["wall_time"] = result.wall_time;
    return j.dump();
}

std::string encode_error(const std::string& message, int task_id) {
    json j;
    j["v"] = kProtocolVersion;
    j["error"] = message;
    if (task_id >= 0) j["task_id"] = task_id;
    return j.dump();
}

Task decode_task(const std::string& line) {
    const json j = parse(line);
    try {
        Task task;
        task.task_id = require(j, "task_id").get<int>();
        task.problem_name = require(j, "problem_name").get<std::string>();
        const auto& w = require(j, "weight");
        task.weight.components = vector_from(require(w, "components"), "weight.components");
        task.weight.index = require(w, "index").get<int>();
        const auto& z = require(j, "z");
        task.z.z_star = vector_from(require(z, "z_star"), "z.z_star");
        task.z.utopian_shift = require(z, "utopian_shift").get<double>();
        const auto& cfg = require(j, "solver_cfg");
        task.solver_cfg.depth_k = require(cfg, "depth_k").get<int>();
        task.solver_cfg.eval_budget = require(cfg, "eval_budget").get<long>();
        task.solver_cfg.ils_initial_step_ratio =
            require(cfg, "ils_initial_step_ratio").get<double>();
        task.solver_cfg.ils_step_shrink = require(cfg, "ils_step_shrink").get<double>();
        task.solver_cfg.ils_min_step = require(cfg, "ils_min_step").get<double>();
        task.solver_cfg.inflation = require(cfg, "inflation").get<double>();
        task.solver_cfg.quality_probe_ratio =
            require(cfg, "quality_probe_ratio").get<double>();
        return task;
    } catch (const json::exception& e) {
        throw WireError(std::string("malformed task record: ") + e.what());
    }
}

TaskResult decode_result(const std::string& line) {
    const json j = parse(line);
    try {
        TaskResult r;
        r.task_id = require(j, "task_id").get<int>();
        r.best_point = vector_from(require(j, "best_point"), "best_point");
        r.objectives = vector_from(require(j, "objectives"), "objectives");
        r.scalar_value = require(j, "scalar_value").get<double>();
        r.evals_used = require(j, "evals_used").get<long>();
        r.wall_time = require(j, "wall_time").get<double>();
        return r;
    } catch (const json::exception& e) {
        throw WireError(std::string("malformed result record: ") + e.what());
    }
}

bool is_error_record(const std::string& line, std::string* message, int* task_id) {
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("error")) return false;
    if (message && j["error"].is_string()) *message = j["error"].get<std::string>();
    if (task_id) *task_id = j.value("task_id", -1);
    return true;
}

std::optional<int> peek_task_id(const std::string& line) {
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    const auto it = j.find("task_id");
    if (it == j.end() || !it->is_number_integer()) return std::nullopt;
    return it->get<int>();
}

}  // namespace mofda::wire

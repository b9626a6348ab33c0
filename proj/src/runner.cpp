#include "mofda/runner.hpp"

#include "mofda/benchmarks.hpp"
#include "mofda/wire.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <optional>

namespace mofda {

bool dominates(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b) {
    return (a.array() <= b.array()).all() && (a.array() < b.array()).any();
}

void nondominated_filter(ParetoArchive& archive) {
    const auto n = archive.results.size();
    archive.dominated_flags.assign(n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i &&
                dominates(archive.results[j].objectives, archive.results[i].objectives)) {
                archive.dominated_flags[i] = true;
                break;
            }
}

TaskResult execute_task(const Task& task) {
    const auto& problem = problem_by_name(task.problem_name);
    const auto objective = scalarize_problem(problem, task.weight, task.z);

    const auto t0 = std::chrono::steady_clock::now();
    SolverResult solved = fda_solve(objective, problem.bounds, task.solver_cfg);
    const auto t1 = std::chrono::steady_clock::now();

    TaskResult result;
    result.task_id = task.task_id;
    result.best_point = solved.best_point;
    result.objectives = problem.evaluate(solved.best_point);
    result.scalar_value = solved.best_value;
    result.evals_used = solved.evals_used;
    result.wall_time = std::chrono::duration<double>(t1 - t0).count();
    result.trace = std::move(solved.trace);
    return result;
}

namespace {

// Shared work queue with retry-once accounting. Results land in slots
// indexed by task_id, so completion order cannot affect output.
class TaskPool {
public:
    TaskPool(std::vector<Task> tasks, const RunOptions& options)
        : tasks_(std::move(tasks)), options_(options) {
        const auto n = tasks_.size();
        results_.resize(n);
        failures_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) queue_.push_back(static_cast<int>(i));
    }

    std::vector<TaskResult> run() {
        std::vector<std::thread> threads;
        const int locals =
            std::min<int>(options_.workers, static_cast<int>(tasks_.size()));
        threads.reserve(static_cast<std::size_t>(locals) + options_.endpoints.size());
        for (int i = 0; i < locals; ++i)
            threads.emplace_back([this] { local_loop(); });
        for (const auto& endpoint : options_.endpoints)
            threads.emplace_back([this, endpoint] { endpoint_loop(endpoint); });
        for (auto& t : threads) t.join();

        std::lock_guard lock(mutex_);
        if (failed_) throw RunnerError(failed_task_, failure_);
        std::vector<TaskResult> out;
        out.reserve(results_.size());
        for (auto& slot : results_) out.push_back(std::move(*slot));
        return out;
    }

private:
    int next_task() {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [this] {
            return failed_ || completed_ == results_.size() || !queue_.empty();
        });
        if (failed_ || completed_ == results_.size()) return -1;
        const int id = queue_.front();
        queue_.pop_front();
        return id;
    }

    void complete(int id, TaskResult result) {
        std::lock_guard lock(mutex_);
        if (!results_[static_cast<std::size_t>(id)]) {
            results_[static_cast<std::size_t>(id)] = std::move(result);
            ++completed_;
        }
        cv_.notify_all();
    }

    void fail(int id, const std::string& why) {
        std::lock_guard lock(mutex_);
        if (failed_) return;
        if (++failures_[static_cast<std::size_t>(id)] == 1) {
            queue_.push_back(id);  // retry once
        } else {
            failed_ = true;
            failed_task_ = id;
            failure_ = why;
        }
        cv_.notify_all();
    }

    void local_loop() {
        int id;
        while ((id = next_task()) >= 0) {
            try {
                complete(id, execute_task(tasks_[static_cast<std::size_t>(id)]));
            } catch (const std::exception& e) {
                fail(id, e.what());
            }
        }
    }

    void endpoint_loop(const std::string& endpoint) {
        std::optional<net::LineStream> conn;
        int id;
        while ((id = next_task()) >= 0) {
            try {
                if (!conn || !conn->valid()) {
                    conn = net::dial(endpoint);
                    conn->set_receive_timeout(options_.task_timeout_s);
                }
                if (!conn->write_line(
                        wire::encode_task(tasks_[static_cast<std::size_t>(id)])))
                    throw std::runtime_error("send failed");
                std::string line;
                switch (conn->read_line(line)) {
                    case net::ReadStatus::ok: break;
                    case net::ReadStatus::timeout:
                        throw std::runtime_error("task timed out");
                    default: throw std::runtime_error("connection lost");
                }
                std::string message;
                if (wire::is_error_record(line, &message))
                    throw std::runtime_error("worker replied: " + message);
                TaskResult result = wire::decode_result(line);
                if (result.task_id != id)
                    throw std::runtime_error("reply for wrong task");
                complete(id, std::move(result));
            } catch (const std::exception& e) {
                conn.reset();
                fail(id, std::string(e.what()) + " [endpoint " + endpoint + "]");
            }
        }
    }

    std::vector<Task> tasks_;
    RunOptions options_;
    std::mutex mutex_;
    std::condition_variable cv_;
    std::deque<int> queue_;
    std::vector<int> failures_;
    std::vector<std::optional<TaskResult>> results_;
    std::size_t completed_ = 0;
    bool failed_ = false;
    int failed_task_ = -1;
    std::string failure_;
};

}  // namespace

ParetoArchive run_mo_fda(const std::string& problem_name, int n,
                         const SolverConfig& solver_cfg, const RunOptions& options,
                         const ReferencePoint* z_override) {
    if (n < 2) throw std::invalid_argument("run_mo_fda: n must be >= 2");
    if (options.workers < 1)
        throw std::invalid_argument("run_mo_fda: workers must be >= 1");
    const auto& problem = problem_by_name(problem_name);
    solver_cfg.validate(problem.dimension);  // fail before spawning workers

    const auto weights = generate_weights(problem.num_objectives, n);
    const ReferencePoint z =
        z_override ? *z_override : ReferencePoint::ideal(problem.num_objectives);

    std::vector<Task> tasks;
    tasks.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        tasks.push_back(Task{i, problem_name, weights[static_cast<std::size_t>(i)], z,
                             solver_cfg});

    TaskPool pool(std::move(tasks), options);
    ParetoArchive archive;
    archive.results = pool.run();
    nondominated_filter(archive);
    return archive;
}

namespace {

std::string handle_task_line(const std::string& line) {
    int task_id = -1;
    try {
        const Task task = wire::decode_task(line);
        task_id = task.task_id;
        return wire::encode_result(execute_task(task));
    } catch (const std::exception& e) {
        if (task_id < 0) task_id = wire::peek_task_id(line).value_or(-1);
        return wire::encode_error(e.what(), task_id);
    }
}

}  // namespace

WorkerServer::WorkerServer(const std::string& address) : server_(address) {}

WorkerServer::~WorkerServer() { stop(); }

void WorkerServer::serve() { server_.serve(handle_task_line); }

void WorkerServer::start() {
    thread_ = std::thread([this] { serve(); });
}

void WorkerServer::stop() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
}

void worker_serve(const std::string& address) {
    WorkerServer server(address);
    server.serve();
}

}  // namespace mofda

#pragma once

#include "mofda/net.hpp"
#include "mofda/tasks.hpp"

#include <stdexcept>
#include <thread>

namespace mofda {

struct RunOptions {
    int workers = 1;                     // local worker threads
    std::vector<std::string> endpoints;  // remote workers, "host:port"
    double task_timeout_s = 600.0;       // per-task reply timeout on endpoints
};

// A task failed twice; the run is aborted rather than returning a partial
// archive.
struct RunnerError : std::runtime_error {
    RunnerError(int task, const std::string& what)
        : std::runtime_error("task " + std::to_string(task) + " failed: " + what),
          task_id(task) {}
    int task_id;
};

// Solves n scalarized subproblems (one per generated weight vector) on a
// pool of local threads plus any remote endpoints, and assembles the archive
// ordered by task_id. The archive content depends only on
// (problem, n, solver_cfg, z); worker count, endpoints, and completion order
// never change it. A crashed or timed-out task is retried once, then the
// whole run fails with that task_id.
ParetoArchive run_mo_fda(const std::string& problem_name, int n,
                         const SolverConfig& solver_cfg, const RunOptions& options = {},
                         const ReferencePoint* z_override = nullptr);

// Serves Task records over newline-delimited JSON; one task at a time,
// stateless between tasks. Malformed records get an error reply and the
// connection stays up.
class WorkerServer {
public:
    explicit WorkerServer(const std::string& address);
    ~WorkerServer();

    std::uint16_t port() const { return server_.port(); }
    void serve();  // blocks until stop()
    void start();  // serve() on a background thread
    void stop();

private:
    net::LineServer server_;
    std::thread thread_;
};

// Blocking service loop; returns only if the server is stopped externally.
void worker_serve(const std::string& address);

}  // namespace mofda

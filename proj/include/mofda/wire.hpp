#pragma once

#include "mofda/tasks.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace mofda::wire {

inline constexpr int kProtocolVersion = 1;

struct WireError : std::runtime_error {
    explicit WireError(const std::string& what) : std::runtime_error(what) {}
};

// One JSON record per line; no trailing newline in the encoded strings.
std::string encode_task(const Task& task);
std::string encode_result(const TaskResult& result);
std::string encode_error(const std::string& message, int task_id = -1);

Task decode_task(const std::string& line);          // throws WireError
TaskResult decode_result(const std::string& line);  // throws WireError

// True when the line is a well-formed error record.
bool is_error_record(const std::string& line, std::string* message = nullptr,
                     int* task_id = nullptr);

// Best-effort task id extraction from a possibly malformed record.
std::optional<int> peek_task_id(const std::string& line);

}  // namespace mofda::wire

#pragma once

#include "momentum/io.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace momentum {

struct TaskOverrides {
    std::optional<std::string> mode;  // exact | float
    std::optional<double> epsilon;
};

struct TaskResult {
    Json report;
    std::vector<std::pair<std::string, std::string>> tables;  // file name under tables/, CSV text
    std::string summary;
};

// Validates the task document, then runs it. Throws InvalidInput or InvariantBreach.
TaskResult run_task(const Json& task, const TaskOverrides& ov = {});

// Exit code for an exception escaping run_task: 2 invalid input, 3 invariant breach.
int exit_code_for(const std::exception& e);
Json error_report(const std::string& task, const std::exception& e);

}  // namespace momentum

#pragma once

#include <chrono>
#include <optional>
#include <string>

namespace axsel {

struct ProcessResult {
    int exit_code = -1;          // -1 when killed by a signal
    int signal = 0;
    bool wall_timeout = false;   // killed by the wall-clock guard
    std::string output;          // stdout and stderr, interleaved
    double wall_seconds = 0.0;
    double cpu_seconds = 0.0;    // user + system of the process tree
};

/// Runs `command` under /bin/sh in its own process group. The CPU limit is
/// applied with RLIMIT_CPU; the whole group is killed once `wall_limit`
/// elapses.
ProcessResult run_shell(const std::string& command, std::optional<int> cpu_limit_seconds,
                        std::chrono::milliseconds wall_limit);

/// Whether the first word of `command` resolves to an executable.
bool command_exists(const std::string& command);

}  // namespace axsel

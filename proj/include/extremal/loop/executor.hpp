#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

namespace extremal {

// Runs candidate programs out-of-process so a hung or crashing program can
// never take the loop down with it.
struct ExecutorConfig {
    std::vector<std::string> interpreter = {"python3"}; // argv prefix
    std::filesystem::path workdir;                      // program files land here
};

struct ExecOutcome {
    int exit_code = -1;  // -1 when the process died by signal or never ran
    bool timed_out = false;
    std::string output;  // stdout, capped at 1 MiB
    std::string error;   // stderr, capped at 1 MiB
};

// Materialize `program_text` as workdir/<file_name>, run it under the
// interpreter with both pipes captured, and kill the process group on
// timeout. Throws std::runtime_error only on harness failures (cannot write
// the file, fork failure); program failures are reported in the outcome.
ExecOutcome run_program(const ExecutorConfig &config, const std::string &program_text,
                        const std::string &file_name, std::chrono::milliseconds timeout);

} // namespace extremal

#include "extremal/loop/executor.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

namespace extremal {
namespace {

constexpr std::size_t kPipeCap = 1 << 20; // per-stream capture limit

void append_capped(std::string &sink, const char *data, std::size_t len) {
    if (sink.size() >= kPipeCap)
        return;
    sink.append(data, std::min(len, kPipeCap - sink.size()));
}

} // namespace

ExecOutcome run_program(const ExecutorConfig &config, const std::string &program_text,
                        const std::string &file_name, std::chrono::milliseconds timeout) {
    if (config.interpreter.empty())
        throw std::runtime_error("executor: empty interpreter command");

    std::filesystem::path workdir = config.workdir;
    if (workdir.empty())
        workdir = std::filesystem::temp_directory_path();
    std::filesystem::create_directories(workdir);
    const std::filesystem::path program_path = workdir / file_name;
    {
        std::ofstream out(program_path, std::ios::trunc);
        if (!out)
            throw std::runtime_error("executor: cannot write " + program_path.string());
        out << program_text;
    }

    int out_pipe[2];
    int err_pipe[2];
    if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0)
        throw std::runtime_error("executor: pipe failed");

    std::vector<std::string> argv_storage = config.interpreter;
    argv_storage.push_back(program_path.string());
    std::vector<char *> argv;
    argv.reserve(argv_storage.size() + 1);
    for (auto &arg : argv_storage)
        argv.push_back(arg.data());
    argv.push_back(nullptr);

    const pid_t pid = fork();
    if (pid < 0) {
        close(out_pipe[0]); close(out_pipe[1]);
        close(err_pipe[0]); close(err_pipe[1]);
        throw std::runtime_error("executor: fork failed");
    }
    if (pid == 0) {
        // Child: own process group so a timeout can kill interpreter children
        // too, pipes on stdout/stderr, stdin from /dev/null.
        setpgid(0, 0);
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        close(out_pipe[0]); close(out_pipe[1]);
        close(err_pipe[0]); close(err_pipe[1]);
        const int devnull = open("/dev/null", O_RDONLY);
        if (devnull >= 0)
            dup2(devnull, STDIN_FILENO);
        execvp(argv[0], argv.data());
        _exit(127);
    }

    close(out_pipe[1]);
    close(err_pipe[1]);
    fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);
    fcntl(err_pipe[0], F_SETFL, O_NONBLOCK);

    ExecOutcome outcome;
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    bool out_open = true;
    bool err_open = true;
    char buffer[4096];

    while (out_open || err_open) {
        const auto now = std::chrono::steady_clock::now();
        if (now >= deadline) {
            outcome.timed_out = true;
            // Kill the group and the child directly (covers the window before
            // the child's setpgid takes effect).
            kill(-pid, SIGKILL);
            kill(pid, SIGKILL);
            break;
        }
        const auto remaining =
            std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);

        pollfd fds[2];
        nfds_t nfds = 0;
        if (out_open)
            fds[nfds++] = {out_pipe[0], POLLIN, 0};
        if (err_open)
            fds[nfds++] = {err_pipe[0], POLLIN, 0};
        const int ready = poll(fds, nfds, static_cast<int>(std::min<long long>(
                                              remaining.count(), 1000)));
        if (ready < 0 && errno != EINTR)
            break;

        for (nfds_t i = 0; i < nfds; ++i) {
            if (!(fds[i].revents & (POLLIN | POLLHUP)))
                continue;
            bool *open_flag = fds[i].fd == out_pipe[0] ? &out_open : &err_open;
            std::string *sink = fds[i].fd == out_pipe[0] ? &outcome.output : &outcome.error;
            while (true) {
                const ssize_t got = read(fds[i].fd, buffer, sizeof buffer);
                if (got > 0) {
                    append_capped(*sink, buffer, static_cast<std::size_t>(got));
                } else if (got == 0) {
                    *open_flag = false;
                    break;
                } else {
                    if (errno != EAGAIN && errno != EWOULDBLOCK && errno != EINTR)
                        *open_flag = false;
                    break;
                }
            }
        }
    }

    close(out_pipe[0]);
    close(err_pipe[0]);

    int status = 0;
    waitpid(pid, &status, 0);
    if (outcome.timed_out)
        outcome.exit_code = -1;
    else if (WIFEXITED(status))
        outcome.exit_code = WEXITSTATUS(status);
    else
        outcome.exit_code = -1;
    return outcome;
}

} // namespace extremal

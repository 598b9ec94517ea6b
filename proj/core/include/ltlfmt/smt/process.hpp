#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <sys/types.h>
#include <vector>

namespace ltlfmt::smt {

/// A child process with piped stdin and stdout. stderr is discarded.
class Process {
public:
    /// Throws BackendError if the executable cannot be started.
    Process(const std::string& executable, const std::vector<std::string>& args);
    ~Process();

    Process(const Process&) = delete;
    Process& operator=(const Process&) = delete;

    /// Throws BackendError if the child has gone away.
    void write(std::string_view data);

    /// Appends whatever arrives before `deadline` to `out`. Returns false on
    /// timeout; throws BackendError on end of stream.
    bool read_some(std::string& out, std::chrono::steady_clock::time_point deadline);

    /// Closes stdin, waits up to `grace` for the child to exit, then kills it.
    void terminate(std::chrono::milliseconds grace = std::chrono::milliseconds(500));

    bool running() const { return pid_ > 0; }
    pid_t pid() const { return pid_; }

private:
    pid_t pid_ = -1;
    int in_ = -1;
    int out_ = -1;
};

} // namespace ltlfmt::smt

#include "ltlfmt/smt/process.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>

#include "ltlfmt/errors.hpp"

namespace ltlfmt::smt {

namespace {

std::string errno_text(int err) { return std::strerror(err); }

void close_fd(int& fd)
{
    if (fd >= 0)
        ::close(fd);
    fd = -1;
}

// Writes with SIGPIPE blocked so a dead child yields EPIPE instead of
// killing the caller.
ssize_t write_no_sigpipe(int fd, const char* data, std::size_t size)
{
    sigset_t pipe_set;
    sigset_t old_set;
    sigemptyset(&pipe_set);
    sigaddset(&pipe_set, SIGPIPE);
    sigset_t pending;
    sigpending(&pending);
    bool was_pending = sigismember(&pending, SIGPIPE);
    pthread_sigmask(SIG_BLOCK, &pipe_set, &old_set);

    ssize_t n = ::write(fd, data, size);
    int err = errno;
    if (n < 0 && err == EPIPE && !was_pending) {
        timespec zero{0, 0};
        while (sigtimedwait(&pipe_set, nullptr, &zero) < 0 && errno == EINTR) {
        }
    }
    pthread_sigmask(SIG_SETMASK, &old_set, nullptr);
    errno = err;
    return n;
}

} // namespace

Process::Process(const std::string& executable, const std::vector<std::string>& args)
{
    int to_child[2];
    int from_child[2];
    int exec_status[2];
    if (pipe2(to_child, O_CLOEXEC) != 0)
        throw BackendError("pipe: " + errno_text(errno));
    if (pipe2(from_child, O_CLOEXEC) != 0) {
        ::close(to_child[0]);
        ::close(to_child[1]);
        throw BackendError("pipe: " + errno_text(errno));
    }
    if (pipe2(exec_status, O_CLOEXEC) != 0) {
        for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]})
            ::close(fd);
        throw BackendError("pipe: " + errno_text(errno));
    }

    std::vector<std::string> storage{executable};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());
    argv.push_back(nullptr);

    pid_t pid = fork();
    if (pid < 0) {
        for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1], exec_status[0], exec_status[1]})
            ::close(fd);
        throw BackendError("fork: " + errno_text(errno));
    }
    if (pid == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        int devnull = ::open("/dev/null", O_WRONLY);
        if (devnull >= 0)
            dup2(devnull, STDERR_FILENO);
        execvp(argv[0], argv.data());
        int err = errno;
        [[maybe_unused]] auto n = ::write(exec_status[1], &err, sizeof err);
        _exit(127);
    }

    ::close(to_child[0]);
    ::close(from_child[1]);
    ::close(exec_status[1]);
    int err = 0;
    ssize_t n;
    do {
        n = ::read(exec_status[0], &err, sizeof err);
    } while (n < 0 && errno == EINTR);
    ::close(exec_status[0]);
    if (n > 0) {
        ::close(to_child[1]);
        ::close(from_child[0]);
        waitpid(pid, nullptr, 0);
        throw BackendError("cannot run solver '" + executable + "': " + errno_text(err));
    }
    pid_ = pid;
    in_ = to_child[1];
    out_ = from_child[0];
}

Process::~Process() { terminate(); }

void Process::write(std::string_view data)
{
    while (!data.empty()) {
        if (in_ < 0)
            throw BackendError("solver input is closed");
        ssize_t n = write_no_sigpipe(in_, data.data(), data.size());
        if (n < 0) {
            if (errno == EINTR)
                continue;
            throw BackendError("solver process is gone (write: " + errno_text(errno) + ")");
        }
        data.remove_prefix(static_cast<std::size_t>(n));
    }
}

bool Process::read_some(std::string& out, std::chrono::steady_clock::time_point deadline)
{
    if (out_ < 0)
        throw BackendError("solver output is closed");
    for (;;) {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
        if (left.count() <= 0)
            return false;
        pollfd p{out_, POLLIN, 0};
        int r = poll(&p, 1, static_cast<int>(std::min<long long>(left.count(), 1 << 30)));
        if (r < 0) {
            if (errno == EINTR)
                continue;
            throw BackendError("poll: " + errno_text(errno));
        }
        if (r == 0)
            return false;
        char buf[4096];
        ssize_t n = ::read(out_, buf, sizeof buf);
        if (n < 0) {
            if (errno == EINTR)
                continue;
            throw BackendError("solver read: " + errno_text(errno));
        }
        if (n == 0)
            throw BackendError("solver process exited unexpectedly");
        out.append(buf, static_cast<std::size_t>(n));
        return true;
    }
}

void Process::terminate(std::chrono::milliseconds grace)
{
    if (pid_ <= 0)
        return;
    close_fd(in_);
    auto deadline = std::chrono::steady_clock::now() + grace;
    int status = 0;
    for (;;) {
        pid_t r = waitpid(pid_, &status, WNOHANG);
        if (r == pid_ || (r < 0 && errno != EINTR))
            break;
        if (std::chrono::steady_clock::now() >= deadline) {
            kill(pid_, SIGKILL);
            while (waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
            }
            break;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    close_fd(out_);
    pid_ = -1;
}

} // namespace ltlfmt::smt

#include "archslicer/subprocess.hpp"

#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace archslicer {

namespace {

// Drains both pipes concurrently so a chatty stream cannot stall the child.
void drain(int out_fd, int err_fd, std::string& out, std::string& err) {
    struct Stream {
        int fd;
        std::string* sink;
        bool open;
    };
    Stream streams[2] = {{out_fd, &out, true}, {err_fd, &err, true}};
    char buf[8192];

    while (streams[0].open || streams[1].open) {
        pollfd fds[2];
        nfds_t n = 0;
        for (auto& s : streams) {
            if (s.open) {
                fds[n].fd = s.fd;
                fds[n].events = POLLIN;
                ++n;
            }
        }
        if (poll(fds, n, -1) < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw std::runtime_error(std::string("poll() failed: ") + std::strerror(errno));
        }
        for (nfds_t i = 0; i < n; ++i) {
            if ((fds[i].revents & (POLLIN | POLLHUP)) == 0) {
                continue;
            }
            for (auto& s : streams) {
                if (s.open && s.fd == fds[i].fd) {
                    ssize_t got = read(s.fd, buf, sizeof buf);
                    if (got > 0) {
                        s.sink->append(buf, static_cast<size_t>(got));
                    } else if (got == 0 || (got < 0 && errno != EINTR)) {
                        s.open = false;
                    }
                }
            }
        }
    }
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
    if (argv.empty()) {
        throw std::runtime_error("run_command: empty argv");
    }

    int out_pipe[2];
    int err_pipe[2];
    if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
        throw std::runtime_error(std::string("pipe() failed: ") + std::strerror(errno));
    }

    pid_t pid = fork();
    if (pid < 0) {
        throw std::runtime_error(std::string("fork() failed: ") + std::strerror(errno));
    }

    if (pid == 0) {
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        close(out_pipe[0]);
        close(out_pipe[1]);
        close(err_pipe[0]);
        close(err_pipe[1]);

        std::vector<char*> args;
        args.reserve(argv.size() + 1);
        for (const auto& a : argv) {
            args.push_back(const_cast<char*>(a.c_str()));
        }
        args.push_back(nullptr);
        execvp(args[0], args.data());
        _exit(127);
    }

    close(out_pipe[1]);
    close(err_pipe[1]);

    CommandResult result;
    drain(out_pipe[0], err_pipe[0], result.output, result.error);
    close(out_pipe[0]);
    close(err_pipe[0]);

    int status = 0;
    while (waitpid(pid, &status, 0) < 0) {
        if (errno != EINTR) {
            throw std::runtime_error(std::string("waitpid() failed: ") + std::strerror(errno));
        }
    }
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result.exit_code = 128 + WTERMSIG(status);
    }
    return result;
}

}  // namespace archslicer

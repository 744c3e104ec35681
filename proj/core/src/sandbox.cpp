// Copyright 2026 The graphrtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphrtc/sandbox.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <fmt/core.h>

#include "graphrtc/strutil.hpp"

namespace grtc::sandbox {

namespace fs = std::filesystem;

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::ok:
      return "ok";
    case Outcome::nonzero_exit:
      return "nonzero_exit";
    case Outcome::timeout:
      return "timeout";
    case Outcome::output_overflow:
      return "output_overflow";
    case Outcome::spawn_failure:
      return "spawn_failure";
  }
  return "unknown";
}

InterpreterCommand InterpreterCommand::parse(const std::string& command_line) {
  InterpreterCommand cmd;
  for (std::string_view token : split_ws(command_line)) {
    cmd.argv_template.emplace_back(token);
  }
  if (cmd.argv_template.empty()) {
    throw ConfigError("interpreter command is empty");
  }
  bool has_slot = false;
  for (const std::string& token : cmd.argv_template) {
    if (token == "{program}") has_slot = true;
  }
  if (!has_slot) cmd.argv_template.emplace_back("{program}");
  return cmd;
}

std::vector<std::string> InterpreterCommand::argv_for(
    const std::string& program_path) const {
  std::vector<std::string> argv;
  argv.reserve(argv_template.size());
  for (const std::string& token : argv_template) {
    argv.push_back(token == "{program}" ? program_path : token);
  }
  return argv;
}

namespace {

struct Pipe {
  int read_fd = -1;
  int write_fd = -1;

  bool open() {
    int fds[2];
    if (pipe(fds) != 0) return false;
    read_fd = fds[0];
    write_fd = fds[1];
    return true;
  }

  void close_read() {
    if (read_fd != -1) ::close(read_fd);
    read_fd = -1;
  }
  void close_write() {
    if (write_fd != -1) ::close(write_fd);
    write_fd = -1;
  }
  ~Pipe() {
    close_read();
    close_write();
  }
};

// Appends from `fd` into `sink`, truncating at `cap`. Returns false on EOF.
bool drain(int fd, std::string& sink, std::uint64_t cap, bool& overflowed) {
  char buffer[65536];
  while (true) {
    ssize_t got = ::read(fd, buffer, sizeof(buffer));
    if (got == 0) return false;
    if (got < 0) {
      if (errno == EAGAIN || errno == EWOULDBLOCK) return true;
      if (errno == EINTR) continue;
      return false;
    }
    std::uint64_t room =
        sink.size() < cap ? cap - sink.size() : 0;
    if (static_cast<std::uint64_t>(got) > room) {
      sink.append(buffer, static_cast<std::size_t>(room));
      overflowed = true;
    } else {
      sink.append(buffer, static_cast<std::size_t>(got));
    }
  }
}

void set_nonblocking(int fd) {
  int flags = fcntl(fd, F_GETFL, 0);
  if (flags >= 0) fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

// The child environment starts from an allow-list, never the full parent
// environment, plus a fixed hash seed so interpreter behavior is stable.
std::vector<std::string> child_environment(const fs::path& workdir) {
  std::vector<std::string> env;
  for (const char* key : {"PATH", "HOME", "LANG", "LC_ALL"}) {
    if (const char* value = std::getenv(key)) {
      env.push_back(fmt::format("{}={}", key, value));
    }
  }
  env.push_back(fmt::format("TMPDIR={}", workdir.string()));
  env.push_back("PYTHONHASHSEED=0");
  return env;
}

}  // namespace

ExecutionResult execute(const InterpreterCommand& interpreter,
                        const std::string& program_source,
                        const std::string& stdin_data,
                        const ExecutionLimits& limits,
                        const std::vector<std::string>& extra_args) {
  ExecutionResult out;
  const auto start = std::chrono::steady_clock::now();

  // Private working directory holding the program and its stdin.
  std::string workdir_template =
      (fs::temp_directory_path() / "graphrtc-run-XXXXXX").string();
  std::vector<char> workdir_buf(workdir_template.begin(),
                                workdir_template.end());
  workdir_buf.push_back('\0');
  if (mkdtemp(workdir_buf.data()) == nullptr) {
    out.stderr_text = "cannot create working directory";
    return out;
  }
  fs::path workdir(workdir_buf.data());
  try {
    const fs::path program_path = workdir / "program.py";
    const fs::path stdin_path = workdir / "stdin.txt";
    write_text_file(program_path, program_source);
    write_text_file(stdin_path, stdin_data);

    std::vector<std::string> argv_storage =
        interpreter.argv_for(program_path.string());
    for (const std::string& arg : extra_args) argv_storage.push_back(arg);
    std::vector<char*> argv;
    for (std::string& arg : argv_storage) argv.push_back(arg.data());
    argv.push_back(nullptr);

    std::vector<std::string> env_storage = child_environment(workdir);
    std::vector<char*> envp;
    for (std::string& var : env_storage) envp.push_back(var.data());
    envp.push_back(nullptr);

    int stdin_fd = ::open(stdin_path.c_str(), O_RDONLY);
    Pipe out_pipe, err_pipe, errno_pipe;
    if (stdin_fd < 0 || !out_pipe.open() || !err_pipe.open() ||
        !errno_pipe.open()) {
      if (stdin_fd >= 0) ::close(stdin_fd);
      out.stderr_text = "cannot set up child descriptors";
      throw std::runtime_error("fd setup");
    }
    fcntl(errno_pipe.write_fd, F_SETFD, FD_CLOEXEC);

    bool mem_limited = false;
    pid_t child = fork();
    if (child < 0) {
      ::close(stdin_fd);
      out.stderr_text = "fork failed";
      throw std::runtime_error("fork");
    }

    if (child == 0) {
      // Child: own process group so the whole subtree can be killed.
      setpgid(0, 0);
      dup2(stdin_fd, STDIN_FILENO);
      dup2(out_pipe.write_fd, STDOUT_FILENO);
      dup2(err_pipe.write_fd, STDERR_FILENO);
      ::close(stdin_fd);
      out_pipe.close_read();
      out_pipe.close_write();
      err_pipe.close_read();
      err_pipe.close_write();
      errno_pipe.close_read();
      if (chdir(workdir.c_str()) != 0) _exit(127);
      execvpe(argv[0], argv.data(), envp.data());
      int code = errno;
      (void)!write(errno_pipe.write_fd, &code, sizeof(code));
      _exit(127);
    }

    // Parent.
    setpgid(child, child);  // harmless if the child won the race
    ::close(stdin_fd);
    out_pipe.close_write();
    err_pipe.close_write();
    errno_pipe.close_write();
    set_nonblocking(out_pipe.read_fd);
    set_nonblocking(err_pipe.read_fd);

    if (limits.max_memory_bytes > 0) {
      struct rlimit cap;
      cap.rlim_cur = limits.max_memory_bytes;
      cap.rlim_max = limits.max_memory_bytes;
      mem_limited = prlimit(child, RLIMIT_AS, &cap, nullptr) == 0;
    }

    const auto deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    limits.wall_timeout);
    bool overflowed = false;
    bool timed_out = false;
    bool out_open = true, err_open = true;
    bool reaped = false;
    int status = 0;

    while (true) {
      if (std::chrono::steady_clock::now() >= deadline) {
        timed_out = true;
        break;
      }
      if (!out_open && !err_open) {
        pid_t done = waitpid(child, &status, WNOHANG);
        if (done == child) {
          reaped = true;
          break;
        }
      }
      if (overflowed) break;

      struct pollfd fds[2];
      nfds_t count = 0;
      if (out_open) fds[count++] = {out_pipe.read_fd, POLLIN, 0};
      if (err_open) fds[count++] = {err_pipe.read_fd, POLLIN, 0};

      auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      int wait_ms = static_cast<int>(
          std::clamp<long long>(remaining.count(), 0, 50));
      if (count == 0) {
        // Output done but the child lives on; poll just for the delay.
        struct pollfd none{-1, 0, 0};
        poll(&none, 1, wait_ms);
        continue;
      }
      poll(fds, count, wait_ms);

      if (out_open &&
          !drain(out_pipe.read_fd, out.stdout_text, limits.max_output_bytes,
                 overflowed)) {
        out_open = false;
      }
      if (err_open &&
          !drain(err_pipe.read_fd, out.stderr_text, limits.max_output_bytes,
                 overflowed)) {
        err_open = false;
      }
    }

    if (!reaped) {
      kill(-child, SIGKILL);
      kill(child, SIGKILL);
      waitpid(child, &status, 0);
    }
    // Kill stragglers that detached from the reaped leader's group.
    kill(-child, SIGKILL);

    // Final drain catches output written between the last poll and exit.
    if (out_open) {
      drain(out_pipe.read_fd, out.stdout_text, limits.max_output_bytes,
            overflowed);
    }
    if (err_open) {
      drain(err_pipe.read_fd, out.stderr_text, limits.max_output_bytes,
            overflowed);
    }

    int exec_errno = 0;
    ssize_t errno_bytes =
        ::read(errno_pipe.read_fd, &exec_errno, sizeof(exec_errno));

    out.memory_limited = mem_limited;
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    if (errno_bytes == sizeof(exec_errno)) {
      out.outcome = Outcome::spawn_failure;
      out.exit_code = 127;
      out.stderr_text = fmt::format("cannot run interpreter: {}",
                                    std::strerror(exec_errno));
    } else if (timed_out) {
      out.outcome = Outcome::timeout;
      if (WIFSIGNALED(status)) {
        out.term_signal = WTERMSIG(status);
        out.exit_code = 128 + out.term_signal;
      } else {
        out.exit_code = -1;
      }
    } else if (overflowed) {
      out.outcome = Outcome::output_overflow;
      out.exit_code = -1;
    } else if (WIFEXITED(status)) {
      out.exit_code = WEXITSTATUS(status);
      out.outcome = out.exit_code == 0 ? Outcome::ok : Outcome::nonzero_exit;
    } else if (WIFSIGNALED(status)) {
      out.term_signal = WTERMSIG(status);
      out.exit_code = 128 + out.term_signal;
      out.outcome = Outcome::nonzero_exit;
    } else {
      out.outcome = Outcome::nonzero_exit;
      out.exit_code = -1;
    }
  } catch (...) {
    out.outcome = Outcome::spawn_failure;
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
  }

  std::error_code ignored;
  fs::remove_all(workdir, ignored);
  return out;
}

SandboxPool::SandboxPool(int max_concurrent)
    : slots_(std::clamp(max_concurrent, 1, 256)) {}

ExecutionResult SandboxPool::run(const InterpreterCommand& interpreter,
                                 const std::string& program_source,
                                 const std::string& stdin_data,
                                 const ExecutionLimits& limits,
                                 const std::vector<std::string>& extra_args) {
  slots_.acquire();
  ExecutionResult result =
      execute(interpreter, program_source, stdin_data, limits, extra_args);
  slots_.release();
  return result;
}

}  // namespace grtc::sandbox

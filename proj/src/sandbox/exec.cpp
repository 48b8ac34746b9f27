// Copyright 2026 The CodeArena Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sandbox/exec.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>

#include "util/errors.hpp"

namespace codearena::sandbox {

namespace {

using Clock = std::chrono::steady_clock;

int WaitStatusToExitCode(int status) {
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
  return -1;
}

}  // namespace

ExecResult ExecCommand(const std::filesystem::path& workdir,
                       const std::string& command, const ExecLimits& limits,
                       const std::map<std::string, std::string>& env) {
  if (command.empty()) throw DataError("empty command");

  int pipe_fds[2];
  if (::pipe(pipe_fds) != 0) {
    throw InfraError(std::string("pipe failed: ") + std::strerror(errno));
  }

  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(pipe_fds[0]);
    ::close(pipe_fds[1]);
    throw InfraError(std::string("fork failed: ") + std::strerror(errno));
  }

  if (pid == 0) {
    // Child: own process group so the whole tree can be killed at once.
    ::setpgid(0, 0);
    ::close(pipe_fds[0]);
    int devnull = ::open("/dev/null", O_RDONLY);
    if (devnull >= 0) ::dup2(devnull, STDIN_FILENO);
    ::dup2(pipe_fds[1], STDOUT_FILENO);
    ::dup2(pipe_fds[1], STDERR_FILENO);
    ::close(pipe_fds[1]);
    if (::chdir(workdir.c_str()) != 0) _exit(126);
    for (const auto& [key, value] : env) {
      ::setenv(key.c_str(), value.c_str(), 1);
    }
    ::execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
    _exit(127);
  }

  ::close(pipe_fds[1]);
  ::setpgid(pid, pid);  // may lose the race with the child; both try

  ExecResult result;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(limits.wall_clock_seconds));

  char buffer[4096];
  bool killed = false;
  auto drain_deadline = deadline;
  for (;;) {
    auto now = Clock::now();
    auto remaining = (killed ? drain_deadline : deadline) - now;
    int timeout_ms = static_cast<int>(std::max<long long>(
        0, std::chrono::duration_cast<std::chrono::milliseconds>(remaining)
               .count()));
    struct pollfd pfd{pipe_fds[0], POLLIN, 0};
    int rc = ::poll(&pfd, 1, timeout_ms);
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (rc == 0) {
      if (killed) break;  // a detached grandchild still holds the pipe
      // Wall clock exhausted; kill the group and drain what remains.
      ::kill(-pid, SIGKILL);
      result.timed_out = true;
      killed = true;
      drain_deadline = Clock::now() + std::chrono::seconds(2);
      continue;
    }
    ssize_t n = ::read(pipe_fds[0], buffer, sizeof(buffer));
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (n == 0) break;  // EOF: no writer left
    std::uint64_t room = limits.max_output_bytes > result.output.size()
                             ? limits.max_output_bytes - result.output.size()
                             : 0;
    if (static_cast<std::uint64_t>(n) > room) {
      result.output.append(buffer, room);
      result.truncated = true;
    } else {
      result.output.append(buffer, n);
    }
  }
  ::close(pipe_fds[0]);

  // The child may have closed its output and kept running; honor the wall
  // clock while reaping.
  int status = 0;
  for (;;) {
    pid_t r = ::waitpid(pid, &status, WNOHANG);
    if (r == pid) break;
    if (r < 0 && errno != EINTR) break;
    if (Clock::now() >= deadline) {
      ::kill(-pid, SIGKILL);
      result.timed_out = true;
      while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
      }
      break;
    }
    ::usleep(5000);
  }
  result.exit_code = WaitStatusToExitCode(status);
  if (result.timed_out) ::kill(-pid, SIGKILL);  // stragglers
  return result;
}

}  // namespace codearena::sandbox

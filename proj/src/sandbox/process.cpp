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

#include "sandbox/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

#include "util/errors.hpp"

namespace codearena::sandbox {

namespace {
using Clock = std::chrono::steady_clock;
}

LineProcess::~LineProcess() { Terminate(); }

void LineProcess::Start(const std::filesystem::path& workdir,
                        const std::string& command) {
  int to_child[2];
  int from_child[2];
  if (::pipe(to_child) != 0) {
    throw InfraError(std::string("pipe failed: ") + std::strerror(errno));
  }
  if (::pipe(from_child) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw InfraError(std::string("pipe failed: ") + std::strerror(errno));
  }

  pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) {
      ::close(fd);
    }
    throw InfraError(std::string("fork failed: ") + std::strerror(errno));
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    // stderr intentionally inherits; bot diagnostics belong to the
    // operator's console, not the wire protocol.
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) {
      ::close(fd);
    }
    if (::chdir(workdir.c_str()) != 0) _exit(126);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
    _exit(127);
  }

  ::close(to_child[0]);
  ::close(from_child[1]);
  ::setpgid(pid, pid);
  pid_ = pid;
  stdin_fd_ = to_child[1];
  stdout_fd_ = from_child[0];
  // A dead reader must not take the engine down with SIGPIPE.
  ::signal(SIGPIPE, SIG_IGN);
}

bool LineProcess::WriteLine(const std::string& line) {
  if (pid_ <= 0 || stdin_fd_ < 0) return false;
  std::string payload = line + "\n";
  std::size_t written = 0;
  while (written < payload.size()) {
    ssize_t n =
        ::write(stdin_fd_, payload.data() + written, payload.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    written += static_cast<std::size_t>(n);
  }
  return true;
}

std::optional<std::string> LineProcess::ReadLine(int timeout_ms) {
  if (pid_ <= 0 || stdout_fd_ < 0) return std::nullopt;
  const auto deadline = Clock::now() + std::chrono::milliseconds(timeout_ms);
  for (;;) {
    auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                         deadline - Clock::now())
                         .count();
    if (remaining < 0) return std::nullopt;
    struct pollfd pfd{stdout_fd_, POLLIN, 0};
    int rc = ::poll(&pfd, 1, static_cast<int>(remaining));
    if (rc < 0) {
      if (errno == EINTR) continue;
      return std::nullopt;
    }
    if (rc == 0) return std::nullopt;  // timeout
    char chunk[4096];
    ssize_t n = ::read(stdout_fd_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      return std::nullopt;
    }
    if (n == 0) return std::nullopt;  // EOF: process died
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void LineProcess::Terminate() {
  if (pid_ <= 0) return;
  ::kill(-pid_, SIGKILL);
  int status = 0;
  while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
  }
  if (stdin_fd_ >= 0) ::close(stdin_fd_);
  if (stdout_fd_ >= 0) ::close(stdout_fd_);
  pid_ = -1;
  stdin_fd_ = -1;
  stdout_fd_ = -1;
}

}  // namespace codearena::sandbox

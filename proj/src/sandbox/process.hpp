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

#ifndef CODEARENA_SANDBOX_PROCESS_HPP_
#define CODEARENA_SANDBOX_PROCESS_HPP_

#include <optional>
#include <filesystem>
#include <string>

#include <sys/types.h>

namespace codearena::sandbox {

// A long-lived child speaking a newline-delimited protocol on its stdio.
// Reads are deadline-bounded; a dead or silent child surfaces as nullopt.
class LineProcess {
 public:
  LineProcess() = default;
  ~LineProcess();
  LineProcess(const LineProcess&) = delete;
  LineProcess& operator=(const LineProcess&) = delete;

  // Spawns `command` via /bin/sh -c in `workdir`. Throws InfraError when
  // the process cannot be created at all.
  void Start(const std::filesystem::path& workdir, const std::string& command);

  bool running() const { return pid_ > 0; }

  // False when the child is gone or its stdin is closed.
  bool WriteLine(const std::string& line);

  // One line without the terminator, or nullopt on timeout/EOF.
  std::optional<std::string> ReadLine(int timeout_ms);

  // SIGKILLs the process group and reaps.
  void Terminate();

 private:
  pid_t pid_ = -1;
  int stdin_fd_ = -1;
  int stdout_fd_ = -1;
  std::string buffer_;
};

}  // namespace codearena::sandbox

#endif  // CODEARENA_SANDBOX_PROCESS_HPP_

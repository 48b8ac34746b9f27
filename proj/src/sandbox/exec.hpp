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

#ifndef CODEARENA_SANDBOX_EXEC_HPP_
#define CODEARENA_SANDBOX_EXEC_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace codearena::sandbox {

struct ExecLimits {
  double wall_clock_seconds = 60.0;
  std::uint64_t max_output_bytes = 1 << 20;
};

struct ExecResult {
  int exit_code = -1;  // 128+N when killed by signal N
  std::string output;  // stdout and stderr interleaved
  bool timed_out = false;
  bool truncated = false;
};

// Runs `command` through /bin/sh -c with the working directory set to
// `workdir`, stdin from /dev/null, stdout+stderr captured. The whole
// process group is killed at the wall-clock limit; output beyond the cap
// is discarded with the truncation flag set. Failure to spawn at all
// throws InfraError (distinct from a non-zero exit).
ExecResult ExecCommand(const std::filesystem::path& workdir,
                       const std::string& command, const ExecLimits& limits,
                       const std::map<std::string, std::string>& env = {});

}  // namespace codearena::sandbox

#endif  // CODEARENA_SANDBOX_EXEC_HPP_

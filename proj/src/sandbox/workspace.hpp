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

#ifndef CODEARENA_SANDBOX_WORKSPACE_HPP_
#define CODEARENA_SANDBOX_WORKSPACE_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace codearena::sandbox {

// One player's exclusive directory for the duration of a tournament.
struct Workspace {
  std::filesystem::path root;
  std::string player_id;
  std::string tournament_id;
};

// Deep-copies the template and creates an empty logs/ directory. Refuses
// to reuse an existing directory.
Workspace Provision(const std::filesystem::path& template_dir,
                    const std::string& player_id,
                    const std::string& tournament_id,
                    const std::filesystem::path& destination);

// Copies the given files into logs/round_<nn>/ inside the workspace.
// Idempotent; earlier rounds are never touched.
void InjectLogs(const Workspace& workspace, int round_index,
                const std::vector<std::filesystem::path>& log_files);

std::string RoundDirName(int round_index);

// Copies the player-authored part of a workspace (everything except
// logs/ and opponent/) — the "code that competed".
void CopyCodeSnapshot(const Workspace& workspace,
                      const std::filesystem::path& destination);

// Replaces workspace/opponent/ with a read-only copy of the snapshot.
// Enforcement is via permission bits, so writes fail for unprivileged
// editors.
void MountOpponentReadonly(const Workspace& workspace,
                           const std::filesystem::path& opponent_snapshot);

}  // namespace codearena::sandbox

#endif  // CODEARENA_SANDBOX_WORKSPACE_HPP_

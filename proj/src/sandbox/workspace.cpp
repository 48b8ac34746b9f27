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

#include "sandbox/workspace.hpp"

#include "sandbox/manifest.hpp"
#include "util/errors.hpp"
#include "util/fs.hpp"
#include "util/text.hpp"

namespace codearena::sandbox {

namespace fs = std::filesystem;

Workspace Provision(const fs::path& template_dir, const std::string& player_id,
                    const std::string& tournament_id,
                    const fs::path& destination) {
  if (!fs::exists(template_dir) || !fs::is_directory(template_dir)) {
    throw ProvisionError("workspace template missing: " +
                         template_dir.string());
  }
  if (fs::exists(destination)) {
    throw ProvisionError("workspace already exists: " + destination.string());
  }
  CopyTree(template_dir, destination);
  fs::create_directories(destination / "logs");
  return Workspace{destination, player_id, tournament_id};
}

std::string RoundDirName(int round_index) {
  return "round_" + PadInt(round_index, 2);
}

void InjectLogs(const Workspace& workspace, int round_index,
                const std::vector<fs::path>& log_files) {
  fs::path dest = workspace.root / "logs" / RoundDirName(round_index);
  std::error_code ec;
  fs::create_directories(dest, ec);
  if (ec) {
    throw InfraError("cannot create log directory: " + dest.string());
  }
  for (const auto& file : log_files) {
    if (!fs::is_regular_file(file)) {
      throw InfraError("log file missing: " + file.string());
    }
    fs::copy_file(file, dest / file.filename(),
                  fs::copy_options::overwrite_existing, ec);
    if (ec) {
      throw InfraError("log copy failed: " + file.string() + " (" +
                       ec.message() + ")");
    }
  }
}

void CopyCodeSnapshot(const Workspace& workspace, const fs::path& destination) {
  CopyTree(workspace.root, destination, IsEngineManagedPath);
}

void MountOpponentReadonly(const Workspace& workspace,
                           const fs::path& opponent_snapshot) {
  fs::path mount = workspace.root / "opponent";
  RemoveTreeForced(mount);
  CopyTree(opponent_snapshot, mount);
  // Files 0444, directories 0555, applied leaves-first so the walk itself
  // is unaffected.
  std::vector<fs::path> dirs;
  dirs.push_back(mount);
  for (auto it = fs::recursive_directory_iterator(mount);
       it != fs::recursive_directory_iterator(); ++it) {
    if (it->is_directory()) {
      dirs.push_back(it->path());
    } else if (it->is_regular_file()) {
      fs::permissions(it->path(),
                      fs::perms::owner_read | fs::perms::group_read |
                          fs::perms::others_read,
                      fs::perm_options::replace);
    }
  }
  for (auto dir = dirs.rbegin(); dir != dirs.rend(); ++dir) {
    fs::permissions(*dir,
                    fs::perms::owner_read | fs::perms::owner_exec |
                        fs::perms::group_read | fs::perms::group_exec |
                        fs::perms::others_read | fs::perms::others_exec,
                    fs::perm_options::replace);
  }
}

}  // namespace codearena::sandbox

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

#ifndef CODEARENA_SANDBOX_MANIFEST_HPP_
#define CODEARENA_SANDBOX_MANIFEST_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace codearena::sandbox {

struct ManifestEntry {
  std::string digest;  // fnv1a64, hex
  std::uint64_t size = 0;

  bool operator==(const ManifestEntry&) const = default;
};

// Snapshot of every regular file under a workspace root, keyed by
// normalized relative path.
struct FileManifest {
  std::map<std::string, ManifestEntry> entries;
  int recorded_round = 0;

  bool operator==(const FileManifest&) const = default;
};

// Per-round deltas feeding the hygiene analytics. Engine-managed subtrees
// (logs/, opponent/) are excluded.
struct FileEvents {
  int round = 0;
  std::vector<std::string> created;
  std::vector<std::string> modified;
  std::vector<std::string> deleted;

  bool Empty() const {
    return created.empty() && modified.empty() && deleted.empty();
  }
};

FileManifest Snapshot(const std::filesystem::path& root, int recorded_round = 0);

FileEvents DiffManifests(const FileManifest& before, const FileManifest& after);

// Line-oriented persistence: one "path<TAB>digest<TAB>size" row per file,
// sorted, with a header declaring the digest algorithm.
std::string ManifestToText(const FileManifest& manifest);
FileManifest ManifestFromText(const std::string& text);
void SaveManifest(const FileManifest& manifest, const std::filesystem::path& path);
FileManifest LoadManifest(const std::filesystem::path& path);

// True for paths under subtrees the engine writes (excluded from hygiene).
bool IsEngineManagedPath(const std::string& relative_path);

}  // namespace codearena::sandbox

#endif  // CODEARENA_SANDBOX_MANIFEST_HPP_

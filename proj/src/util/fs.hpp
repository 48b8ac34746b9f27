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

#ifndef CODEARENA_UTIL_FS_HPP_
#define CODEARENA_UTIL_FS_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace codearena {

// FNV-1a, 64 bit. The project's declared stable content-hash: identical
// bytes hash identically on every platform.
std::uint64_t Fnv1a64(std::string_view bytes);
std::string DigestHex(std::uint64_t digest);

std::string ReadFileOrThrow(const std::filesystem::path& path);
void WriteFileOrThrow(const std::filesystem::path& path,
                      std::string_view content);

std::uint64_t DigestFile(const std::filesystem::path& path);

// Relative paths (generic '/' separators) of all regular files under root,
// sorted; directories themselves are not listed.
std::vector<std::string> ListFilesRecursive(const std::filesystem::path& root);

// Recursive copy of regular files and directories. `skip` (when set) is
// called with the source-relative path of each top-level-or-deeper entry;
// returning true prunes it.
void CopyTree(const std::filesystem::path& from, const std::filesystem::path& to,
              const std::function<bool(const std::string&)>& skip = nullptr);

// Makes everything under root writable again (used before deleting
// read-only opponent mounts), then removes it.
void RemoveTreeForced(const std::filesystem::path& root);

}  // namespace codearena

#endif  // CODEARENA_UTIL_FS_HPP_

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

#include "util/fs.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "util/errors.hpp"

namespace codearena {

namespace fs = std::filesystem;

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string DigestHex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(digest));
  return buf;
}

std::string ReadFileOrThrow(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InfraError("cannot read file: " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw InfraError("read failed: " + path.string());
  return out.str();
}

void WriteFileOrThrow(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InfraError("cannot write file: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw InfraError("write failed: " + path.string());
}

std::uint64_t DigestFile(const fs::path& path) {
  return Fnv1a64(ReadFileOrThrow(path));
}

std::vector<std::string> ListFilesRecursive(const fs::path& root) {
  std::vector<std::string> files;
  for (auto it = fs::recursive_directory_iterator(root);
       it != fs::recursive_directory_iterator(); ++it) {
    if (it->is_regular_file()) {
      files.push_back(fs::relative(it->path(), root).generic_string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

void CopyTree(const fs::path& from, const fs::path& to,
              const std::function<bool(const std::string&)>& skip) {
  if (!fs::exists(from) || !fs::is_directory(from)) {
    throw ProvisionError("source directory missing: " + from.string());
  }
  fs::create_directories(to);
  for (auto it = fs::recursive_directory_iterator(from);
       it != fs::recursive_directory_iterator(); ++it) {
    std::string rel = fs::relative(it->path(), from).generic_string();
    if (skip && skip(rel)) {
      if (it->is_directory()) it.disable_recursion_pending();
      continue;
    }
    fs::path dest = to / fs::path(rel);
    if (it->is_directory()) {
      fs::create_directories(dest);
    } else if (it->is_regular_file()) {
      fs::create_directories(dest.parent_path());
      fs::copy_file(it->path(), dest, fs::copy_options::overwrite_existing);
    }
  }
}

void RemoveTreeForced(const fs::path& root) {
  if (!fs::exists(root)) return;
  std::error_code ec;
  for (auto it = fs::recursive_directory_iterator(root);
       it != fs::recursive_directory_iterator(); ++it) {
    fs::permissions(it->path(),
                    fs::perms::owner_read | fs::perms::owner_write |
                        fs::perms::owner_exec,
                    fs::perm_options::add, ec);
  }
  fs::remove_all(root);
}

}  // namespace codearena

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

#include "sandbox/manifest.hpp"

#include <sstream>

#include "util/errors.hpp"
#include "util/fs.hpp"
#include "util/text.hpp"

namespace codearena::sandbox {

bool IsEngineManagedPath(const std::string& relative_path) {
  return relative_path == "logs" || relative_path.rfind("logs/", 0) == 0 ||
         relative_path == "opponent" ||
         relative_path.rfind("opponent/", 0) == 0;
}

FileManifest Snapshot(const std::filesystem::path& root, int recorded_round) {
  FileManifest manifest;
  manifest.recorded_round = recorded_round;
  for (const std::string& rel : ListFilesRecursive(root)) {
    ManifestEntry entry;
    std::string content = ReadFileOrThrow(root / rel);
    entry.digest = DigestHex(Fnv1a64(content));
    entry.size = content.size();
    manifest.entries.emplace(rel, entry);
  }
  return manifest;
}

FileEvents DiffManifests(const FileManifest& before, const FileManifest& after) {
  FileEvents events;
  events.round = after.recorded_round;
  for (const auto& [path, entry] : after.entries) {
    if (IsEngineManagedPath(path)) continue;
    auto it = before.entries.find(path);
    if (it == before.entries.end()) {
      events.created.push_back(path);
    } else if (it->second.digest != entry.digest) {
      events.modified.push_back(path);
    }
  }
  for (const auto& [path, entry] : before.entries) {
    if (IsEngineManagedPath(path)) continue;
    if (!after.entries.count(path)) events.deleted.push_back(path);
  }
  return events;
}

std::string ManifestToText(const FileManifest& manifest) {
  std::ostringstream out;
  out << "# manifest digest=fnv1a64 round=" << manifest.recorded_round << '\n';
  for (const auto& [path, entry] : manifest.entries) {
    out << path << '\t' << entry.digest << '\t' << entry.size << '\n';
  }
  return out.str();
}

FileManifest ManifestFromText(const std::string& text) {
  FileManifest manifest;
  bool header_seen = false;
  int line_number = 0;
  for (const std::string& line : SplitString(text, '\n')) {
    ++line_number;
    if (TrimWhitespace(line).empty()) continue;
    if (line[0] == '#') {
      if (!header_seen) {
        header_seen = true;
        auto pos = line.find("round=");
        if (pos != std::string::npos) {
          auto round = ParseInt(line.substr(pos + 6));
          if (round) manifest.recorded_round = static_cast<int>(*round);
        }
      }
      continue;
    }
    auto cells = SplitString(line, '\t');
    if (cells.size() != 3) {
      throw DataError("manifest line " + std::to_string(line_number) +
                      " malformed");
    }
    auto size = ParseInt(cells[2]);
    if (!size || *size < 0) {
      throw DataError("manifest line " + std::to_string(line_number) +
                      " has a bad size");
    }
    manifest.entries[cells[0]] =
        ManifestEntry{cells[1], static_cast<std::uint64_t>(*size)};
  }
  return manifest;
}

void SaveManifest(const FileManifest& manifest,
                  const std::filesystem::path& path) {
  WriteFileOrThrow(path, ManifestToText(manifest));
}

FileManifest LoadManifest(const std::filesystem::path& path) {
  return ManifestFromText(ReadFileOrThrow(path));
}

}  // namespace codearena::sandbox

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

#include "analytics/hygiene.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace codearena::analytics {

namespace {

constexpr std::size_t kMinRedundancyTokenLength = 4;

std::string Basename(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// "v2", "r13": one letter followed by digits.
bool IsVersionToken(std::string_view s) {
  if (s.size() < 2) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return IsDigits(s.substr(1));
}

bool IsSeparator(char c) { return c == '_' || c == '-' || c == '.'; }

struct CreationInfo {
  int round = 0;
  bool root_level = false;
};

// First-creation round per path plus later-round usage, shared by the
// throwaway and reuse metrics.
struct UsageIndex {
  std::map<std::string, CreationInfo> created;
  int last_round = 0;
  std::set<std::string> used;
};

UsageIndex BuildUsageIndex(const std::vector<sandbox::FileEvents>& events,
                           const ContentReader& read_content) {
  UsageIndex index;
  std::map<std::string, std::vector<int>> modified_rounds;
  // (round, path) of every creation or modification, for reference checks.
  std::vector<std::pair<int, std::string>> touched;
  for (const auto& round_events : events) {
    index.last_round = std::max(index.last_round, round_events.round);
    for (const auto& path : round_events.created) {
      if (!index.created.count(path)) {
        index.created[path] = CreationInfo{
            round_events.round, path.find('/') == std::string::npos};
      }
      touched.emplace_back(round_events.round, path);
    }
    for (const auto& path : round_events.modified) {
      modified_rounds[path].push_back(round_events.round);
      touched.emplace_back(round_events.round, path);
    }
  }

  for (const auto& [path, info] : index.created) {
    bool used = false;
    auto mods = modified_rounds.find(path);
    if (mods != modified_rounds.end()) {
      for (int r : mods->second) {
        if (r > info.round) {
          used = true;
          break;
        }
      }
    }
    if (!used && read_content) {
      const std::string name = Basename(path);
      for (const auto& [round, other] : touched) {
        if (round <= info.round || other == path) continue;
        auto content = read_content(other);
        if (content && content->find(name) != std::string::npos) {
          used = true;
          break;
        }
      }
    }
    if (used) index.used.insert(path);
  }
  return index;
}

}  // namespace

std::string NormalizeFilename(const std::string& filename) {
  std::string name = Basename(filename);
  // Drop the extension (a leading dot is not an extension).
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);

  for (;;) {
    auto sep = name.find_last_of("_-.");
    if (sep == std::string::npos || sep + 1 >= name.size()) break;
    std::string_view tail = std::string_view(name).substr(sep + 1);
    if (IsDigits(tail) || IsVersionToken(tail)) {
      name = name.substr(0, sep);
      continue;
    }
    break;
  }
  // A bare separator left at the end adds nothing to the token.
  while (!name.empty() && IsSeparator(name.back())) name.pop_back();
  return name;
}

std::optional<double> FilenameRedundancy(
    const std::vector<std::string>& created_paths) {
  if (created_paths.empty()) return std::nullopt;
  std::map<std::string, int> token_counts;
  std::vector<std::string> tokens;
  tokens.reserve(created_paths.size());
  for (const auto& path : created_paths) {
    std::string token = NormalizeFilename(path);
    tokens.push_back(token);
    ++token_counts[token];
  }
  int redundant = 0;
  for (const auto& token : tokens) {
    if (token.size() >= kMinRedundancyTokenLength && token_counts[token] >= 2) {
      ++redundant;
    }
  }
  return static_cast<double>(redundant) /
         static_cast<double>(created_paths.size());
}

ThrowawayReport ThrowawayFiles(const std::vector<sandbox::FileEvents>& events,
                               const ContentReader& read_content) {
  UsageIndex index = BuildUsageIndex(events, read_content);
  ThrowawayReport report;
  for (const auto& [path, info] : index.created) {
    if (info.round >= index.last_round) continue;  // no observation window
    ++report.created_considered;
    if (index.used.count(path)) continue;
    (info.root_level ? report.root : report.subdirectory).push_back(path);
  }
  std::sort(report.root.begin(), report.root.end());
  std::sort(report.subdirectory.begin(), report.subdirectory.end());
  return report;
}

HygieneRatios ComputeHygieneRatios(const std::vector<sandbox::FileEvents>& events,
                                   const ContentReader& read_content) {
  UsageIndex index = BuildUsageIndex(events, read_content);
  HygieneRatios ratios;
  if (index.created.empty()) return ratios;
  int total = static_cast<int>(index.created.size());
  int at_root = 0;
  for (const auto& [path, info] : index.created) {
    if (info.root_level) ++at_root;
  }
  ratios.root_clutter = static_cast<double>(at_root) / total;
  ratios.file_reuse = static_cast<double>(index.used.size()) / total;
  return ratios;
}

}  // namespace codearena::analytics

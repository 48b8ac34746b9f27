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

#ifndef CODEARENA_ANALYTICS_HYGIENE_HPP_
#define CODEARENA_ANALYTICS_HYGIENE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sandbox/manifest.hpp"

namespace codearena::analytics {

// Filename normalization for the redundancy metric: drop the extension,
// then iteratively strip trailing digit segments and single-letter+digits
// version tokens ("_13", "-v2", ".3"). "analyze_round_13_v2.py" and
// "analyze_round_7.py" both normalize to "analyze_round".
std::string NormalizeFilename(const std::string& filename);

// Fraction of created files whose normalized name token (length >= 4) is
// shared with at least one other created file. Absent for no files.
std::optional<double> FilenameRedundancy(
    const std::vector<std::string>& created_paths);

// Reads the current content of a workspace-relative path; empty optional
// when the file no longer exists.
using ContentReader =
    std::function<std::optional<std::string>(const std::string&)>;

struct ThrowawayReport {
  std::vector<std::string> root;         // throwaway files at workspace root
  std::vector<std::string> subdirectory; // throwaway files in subdirectories
  int created_considered = 0;            // excludes final-round creations
};

// A file created in round r is throwaway when no later round modifies it
// and no file created or modified later mentions its name. Files created
// in the final round have no observation window and are excluded.
ThrowawayReport ThrowawayFiles(const std::vector<sandbox::FileEvents>& events,
                               const ContentReader& read_content);

struct HygieneRatios {
  std::optional<double> root_clutter;  // created at root / created
  std::optional<double> file_reuse;    // used again after creation / created
};

HygieneRatios ComputeHygieneRatios(const std::vector<sandbox::FileEvents>& events,
                                   const ContentReader& read_content);

}  // namespace codearena::analytics

#endif  // CODEARENA_ANALYTICS_HYGIENE_HPP_

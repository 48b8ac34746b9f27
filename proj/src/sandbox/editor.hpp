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

#ifndef CODEARENA_SANDBOX_EDITOR_HPP_
#define CODEARENA_SANDBOX_EDITOR_HPP_

#include <string>
#include <vector>

#include "sandbox/exec.hpp"
#include "sandbox/workspace.hpp"

namespace codearena::sandbox {

enum class EditorKind { kNoop, kScripted, kExternal };

struct EditorSpec {
  EditorKind kind = EditorKind::kNoop;
  // kScripted: one shell command per round, applied as a single step;
  // rounds beyond the list are no-ops.
  std::vector<std::string> scripts;
  // kExternal: invoked once per step with CODEARENA_ROUND / CODEARENA_STEP /
  // CODEARENA_BUDGET in the environment. Exit 0 means done, exit 42 means
  // yield (another step wanted), anything else counts as a crash.
  std::string command;
};

enum class EditTermination { kCompleted, kBudgetExhausted, kCrashed };

struct EditReport {
  int steps_used = 0;
  EditTermination termination = EditTermination::kCompleted;
  // Reserved; scripted editors have no spend to account for.
  double cost = 0.0;
};

// Drives one edit phase. Editor failures never propagate: the workspace is
// left as-is and the report says what happened.
EditReport RunEditor(const EditorSpec& editor, const Workspace& workspace,
                     int round_index, int step_budget,
                     const ExecLimits& step_limits);

inline constexpr int kExternalEditorYieldExit = 42;

}  // namespace codearena::sandbox

#endif  // CODEARENA_SANDBOX_EDITOR_HPP_

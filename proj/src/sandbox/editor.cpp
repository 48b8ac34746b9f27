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

#include "sandbox/editor.hpp"

namespace codearena::sandbox {

EditReport RunEditor(const EditorSpec& editor, const Workspace& workspace,
                     int round_index, int step_budget,
                     const ExecLimits& step_limits) {
  EditReport report;
  switch (editor.kind) {
    case EditorKind::kNoop:
      return report;

    case EditorKind::kScripted: {
      if (round_index < 1 ||
          round_index > static_cast<int>(editor.scripts.size())) {
        return report;  // no script for this round
      }
      const std::string& script = editor.scripts[round_index - 1];
      if (script.empty()) return report;
      if (step_budget < 1) {
        report.termination = EditTermination::kBudgetExhausted;
        return report;
      }
      try {
        ExecResult result = ExecCommand(workspace.root, script, step_limits);
        report.steps_used = 1;
        if (result.timed_out || result.exit_code != 0) {
          report.termination = EditTermination::kCrashed;
        }
      } catch (const std::exception&) {
        report.termination = EditTermination::kCrashed;
      }
      return report;
    }

    case EditorKind::kExternal: {
      for (int step = 1; step <= step_budget; ++step) {
        std::map<std::string, std::string> env{
            {"CODEARENA_ROUND", std::to_string(round_index)},
            {"CODEARENA_STEP", std::to_string(step)},
            {"CODEARENA_BUDGET", std::to_string(step_budget)},
        };
        ExecResult result;
        try {
          result = ExecCommand(workspace.root, editor.command, step_limits, env);
        } catch (const std::exception&) {
          report.termination = EditTermination::kCrashed;
          return report;
        }
        report.steps_used = step;
        if (result.timed_out) {
          report.termination = EditTermination::kCrashed;
          return report;
        }
        if (result.exit_code == 0) {
          report.termination = EditTermination::kCompleted;
          return report;
        }
        if (result.exit_code != kExternalEditorYieldExit) {
          report.termination = EditTermination::kCrashed;
          return report;
        }
      }
      report.termination = EditTermination::kBudgetExhausted;
      return report;
    }
  }
  return report;
}

}  // namespace codearena::sandbox

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

#include "gridsnake/protocol.hpp"

#include <chrono>

#include <json.hpp>

#include "gridsnake/log.hpp"
#include "sandbox/process.hpp"

namespace codearena::gridsnake {

namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

class SubprocessBot : public SnakeBot {
 public:
  SubprocessBot(std::filesystem::path workspace_root, std::string command,
                int move_timeout_ms)
      : workspace_root_(std::move(workspace_root)),
        command_(std::move(command)),
        move_timeout_ms_(move_timeout_ms) {}

  std::string Hello() override {
    try {
      process_.Start(workspace_root_, command_);
    } catch (const std::exception&) {
      return "";
    }
    if (!process_.WriteLine(R"({"type":"hello"})")) return "";
    auto reply = process_.ReadLine(move_timeout_ms_);
    if (!reply) return "";
    auto parsed = Json::parse(*reply, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("name") ||
        !parsed["name"].is_string()) {
      return "";
    }
    std::string name = parsed["name"].get<std::string>();
    return name.empty() ? "?" : name;
  }

  MoveReply RequestMove(const GameState& state, int snake_index) override {
    MoveReply reply;
    if (!process_.running()) return reply;
    Json request;
    request["type"] = "move_request";
    request["you"] = state.snakes[snake_index].id;
    request["state"] = Json::parse(SnapshotLine(state, {}, {}));
    auto start = Clock::now();
    if (!process_.WriteLine(request.dump())) return reply;
    auto line = process_.ReadLine(move_timeout_ms_);
    reply.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           Clock::now() - start)
                           .count();
    if (!line) return reply;  // timeout or dead process
    auto parsed = Json::parse(*line, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("move") ||
        !parsed["move"].is_string()) {
      return reply;
    }
    reply.direction = DirectionFromString(parsed["move"].get<std::string>());
    return reply;
  }

 private:
  std::filesystem::path workspace_root_;
  std::string command_;
  int move_timeout_ms_;
  sandbox::LineProcess process_;
};

}  // namespace

std::unique_ptr<SnakeBot> MakeSubprocessBot(
    const std::filesystem::path& workspace_root, const std::string& command,
    int move_timeout_ms) {
  return std::make_unique<SubprocessBot>(workspace_root, command,
                                         move_timeout_ms);
}

}  // namespace codearena::gridsnake

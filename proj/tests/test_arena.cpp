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

#include "arena/arena.hpp"

#include <doctest.h>

#include <filesystem>
#include <map>

#include "arena/number_duel.hpp"
#include "gridsnake/arena.hpp"
#include "temp_dir.hpp"
#include "util/errors.hpp"
#include "util/fs.hpp"

namespace {

namespace fs = std::filesystem;
using codearena::ConfigError;
using codearena::DataError;
using codearena::WriteFileOrThrow;
using codearena::arena::IsArenaRegistered;
using codearena::arena::MakeArena;
using codearena::arena::MatchTally;
using codearena::arena::NumberDuelArena;
using codearena::arena::Participant;
using codearena::arena::RegisterBuiltinArenas;
using codearena::arena::RunMatch;
using codearena::arena::SimSeed;
using codearena::gridsnake::GridSnakeArena;
using codearena::testing::TempDir;

fs::path MakeMoveWorkspace(const TempDir& tmp, const std::string& name,
                           const std::string& content) {
  fs::path dir = tmp.path() / name;
  fs::create_directories(dir);
  WriteFileOrThrow(dir / "move.txt", content);
  return dir;
}

fs::path MakeSnakeWorkspace(const TempDir& tmp, const std::string& name,
                            const std::string& bot_line) {
  fs::path dir = tmp.path() / name;
  fs::create_directories(dir);
  WriteFileOrThrow(dir / "bot.txt", bot_line + "\n");
  return dir;
}

}  // namespace

TEST_CASE("number duel validation names its failure modes") {
  TempDir tmp("nd");
  NumberDuelArena arena;

  auto ok = arena.Validate(MakeMoveWorkspace(tmp, "ok", "42\n"));
  CHECK(ok.ok);

  fs::path empty = tmp.path() / "empty";
  fs::create_directories(empty);
  auto missing = arena.Validate(empty);
  CHECK(!missing.ok);
  CHECK(missing.reason == "entrypoint missing");

  auto garbage = arena.Validate(MakeMoveWorkspace(tmp, "bad", "abc\n"));
  CHECK(!garbage.ok);
  CHECK(garbage.reason == "unparsable");

  auto huge = arena.Validate(MakeMoveWorkspace(tmp, "big", "2147483648\n"));
  CHECK(!huge.ok);
  CHECK(huge.reason == "out of range");

  auto negative = arena.Validate(MakeMoveWorkspace(tmp, "neg", "-1\n"));
  CHECK(!negative.ok);
}

TEST_CASE("number duel simulations compare the submitted integers") {
  TempDir tmp("nd");
  NumberDuelArena arena;
  std::vector<Participant> parts{
      {"a", MakeMoveWorkspace(tmp, "a", "7\n")},
      {"b", MakeMoveWorkspace(tmp, "b", "3\n")},
  };
  auto outcome = arena.RunSimulation(parts, 1, tmp.path() / "sim.txt");
  CHECK(outcome.winner == "a");
  CHECK(outcome.raw_score["a"] == 7.0);
  CHECK(outcome.raw_score["b"] == 3.0);
  CHECK(codearena::ReadFileOrThrow(tmp.path() / "sim.txt") ==
        "a=7 b=3 winner=a\n");

  std::vector<Participant> tied{
      {"a", MakeMoveWorkspace(tmp, "a5", "5\n")},
      {"b", MakeMoveWorkspace(tmp, "b5", "5\n")},
  };
  CHECK(arena.RunSimulation(tied, 1, tmp.path() / "tie.txt").winner.empty());
}

TEST_CASE("a deterministic arena sweeps every simulation") {
  TempDir tmp("nd");
  NumberDuelArena arena;
  std::vector<Participant> parts{
      {"a", MakeMoveWorkspace(tmp, "a", "7\n")},
      {"b", MakeMoveWorkspace(tmp, "b", "3\n")},
  };
  MatchTally tally = RunMatch(arena, parts, 1000, 99, tmp.path() / "logs");
  CHECK(tally.sim_wins["a"] == 1000);
  CHECK(tally.sim_wins["b"] == 0);
  CHECK(tally.ties == 0);
  CHECK(fs::is_regular_file(tmp.path() / "logs" / "sim_0.txt"));
  CHECK(fs::is_regular_file(tmp.path() / "logs" / "sim_999.txt"));

  MatchTally single = RunMatch(arena, parts, 1, 99, tmp.path() / "single");
  CHECK(single.sim_wins["a"] == 1);
  CHECK(single.sims == 1);

  CHECK_THROWS_AS(RunMatch(arena, parts, 0, 1, tmp.path() / "x"), DataError);
}

TEST_CASE("run_match equals independent simulations on the derived seeds") {
  TempDir tmp("gs");
  std::map<std::string, std::string> args{{"max_turns", "60"}};
  GridSnakeArena arena(args);
  std::vector<Participant> parts{
      {"a", MakeSnakeWorkspace(tmp, "a", "builtin:greedy")},
      {"b", MakeSnakeWorkspace(tmp, "b", "builtin:greedy")},
  };
  const std::uint64_t match_seed = 777;
  const int sims = 12;
  MatchTally tally =
      RunMatch(arena, parts, sims, match_seed, tmp.path() / "match");

  MatchTally manual;
  manual.sims = sims;
  manual.sim_wins = {{"a", 0}, {"b", 0}};
  for (int k = 0; k < sims; ++k) {
    auto outcome = arena.RunSimulation(
        parts, SimSeed(match_seed, k),
        tmp.path() / ("manual_" + std::to_string(k) + ".jsonl"));
    if (outcome.winner.empty()) {
      ++manual.ties;
    } else {
      ++manual.sim_wins[outcome.winner];
    }
  }
  CHECK(tally.sim_wins == manual.sim_wins);
  CHECK(tally.ties == manual.ties);

  // The per-sim logs agree byte for byte as well.
  for (int k = 0; k < sims; ++k) {
    CHECK(codearena::ReadFileOrThrow(tmp.path() / "match" /
                                     ("sim_" + std::to_string(k) + ".jsonl")) ==
          codearena::ReadFileOrThrow(
              tmp.path() / ("manual_" + std::to_string(k) + ".jsonl")));
  }
}

TEST_CASE("swapping identical players swaps the outcome labels exactly") {
  TempDir tmp("gs");
  std::map<std::string, std::string> args{{"max_turns", "80"}};
  GridSnakeArena arena(args);
  fs::path wa = MakeSnakeWorkspace(tmp, "a", "builtin:greedy");
  fs::path wb = MakeSnakeWorkspace(tmp, "b", "builtin:greedy");
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto forward = arena.RunSimulation({{"a", wa}, {"b", wb}}, seed,
                                       tmp.path() / "f.jsonl");
    auto swapped = arena.RunSimulation({{"b", wb}, {"a", wa}}, seed,
                                       tmp.path() / "s.jsonl");
    if (forward.winner.empty()) {
      CHECK(swapped.winner.empty());
    } else {
      CHECK(swapped.winner == (forward.winner == "a" ? "b" : "a"));
    }
  }
}

TEST_CASE("gridsnake validation checks the bot pointer") {
  TempDir tmp("gs");
  GridSnakeArena arena({});

  auto ok = arena.Validate(MakeSnakeWorkspace(tmp, "ok", "builtin:greedy"));
  CHECK(ok.ok);
  auto cmd = arena.Validate(MakeSnakeWorkspace(tmp, "cmd", "python3 main.py"));
  CHECK(cmd.ok);

  fs::path empty_dir = tmp.path() / "none";
  fs::create_directories(empty_dir);
  auto missing = arena.Validate(empty_dir);
  CHECK(!missing.ok);
  CHECK(missing.reason == "entrypoint missing");

  auto blank = arena.Validate(MakeSnakeWorkspace(tmp, "blank", ""));
  CHECK(!blank.ok);
  CHECK(blank.reason == "empty command");

  auto bogus = arena.Validate(MakeSnakeWorkspace(tmp, "bogus", "builtin:nope"));
  CHECK(!bogus.ok);
  CHECK(bogus.reason.find("unknown builtin bot") == 0);
}

TEST_CASE("arena registry") {
  RegisterBuiltinArenas();
  RegisterBuiltinArenas();  // idempotent
  CHECK(IsArenaRegistered("NumberDuel"));
  CHECK(IsArenaRegistered("GridSnake"));
  CHECK(!IsArenaRegistered("Quake"));
  CHECK_THROWS_AS(MakeArena("Quake", {}), ConfigError);
  CHECK_THROWS_AS(MakeArena("NumberDuel", {{"x", "1"}}), ConfigError);
  CHECK_THROWS_AS(MakeArena("GridSnake", {{"bogus_arg", "1"}}), ConfigError);
  CHECK_THROWS_AS(MakeArena("GridSnake", {{"width", "5"}}), ConfigError);
  CHECK_THROWS_AS(MakeArena("GridSnake", {{"food_spawn_chance", "1.5"}}),
                  ConfigError);
  CHECK_THROWS_AS(MakeArena("GridSnake", {{"width", "eleven"}}), ConfigError);
  auto arena = MakeArena("GridSnake", {{"width", "13"}, {"height", "9"}});
  CHECK(arena->descriptor().arena_id == "GridSnake");
}

TEST_CASE("participant bounds are enforced") {
  TempDir tmp("nd");
  NumberDuelArena arena;
  std::vector<Participant> one{{"a", MakeMoveWorkspace(tmp, "a", "1\n")}};
  CHECK_THROWS_AS(RunMatch(arena, one, 5, 1, tmp.path() / "x"), DataError);
}

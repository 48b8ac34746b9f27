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

#ifndef CODEARENA_ENGINE_RECORDS_IO_HPP_
#define CODEARENA_ENGINE_RECORDS_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "engine/records.hpp"

namespace codearena::engine {

// tournament.txt: the audited, replayable summary at the results root.
std::string TournamentSummaryText(const TournamentRecord& record);
void WriteTournamentSummary(const TournamentRecord& record,
                            const std::filesystem::path& results_dir);

// Per-round tally.txt living in the round directory.
std::string RoundTallyText(const RoundRecord& round, int sims_per_round);

// Parses a tournament.txt back into a record (rounds carry the fields the
// summary stores). Throws DataError on malformed input.
TournamentRecord ReadTournamentSummary(const std::filesystem::path& file);

// Results discovery: the path itself when it holds a tournament.txt,
// otherwise every immediate child that does.
std::vector<std::filesystem::path> FindResultsDirs(
    const std::filesystem::path& path);

}  // namespace codearena::engine

#endif  // CODEARENA_ENGINE_RECORDS_IO_HPP_

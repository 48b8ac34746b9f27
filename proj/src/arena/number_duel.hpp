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

#ifndef CODEARENA_ARENA_NUMBER_DUEL_HPP_
#define CODEARENA_ARENA_NUMBER_DUEL_HPP_

#include "arena/arena.hpp"

namespace codearena::arena {

// Zero-noise reference arena for exercising the engine: the submission is
// a move.txt holding a base-10 integer in [0, 2^31); the larger number
// wins a simulation, equal numbers tie, and the seed is ignored.
class NumberDuelArena : public Arena {
 public:
  NumberDuelArena();

  const ArenaDescriptor& descriptor() const override { return descriptor_; }
  ValidationReport Validate(
      const std::filesystem::path& workspace_root) const override;
  SimOutcome RunSimulation(const std::vector<Participant>& participants,
                           std::uint64_t seed,
                           const std::filesystem::path& log_path) const override;

 private:
  ArenaDescriptor descriptor_;
};

}  // namespace codearena::arena

#endif  // CODEARENA_ARENA_NUMBER_DUEL_HPP_

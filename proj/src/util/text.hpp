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

#ifndef CODEARENA_UTIL_TEXT_HPP_
#define CODEARENA_UTIL_TEXT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codearena {

std::vector<std::string> SplitString(std::string_view s, char delim);
std::string TrimWhitespace(std::string_view s);

// Strict base-10 parse of the whole (trimmed) string; nullopt on anything
// else, including overflow.
std::optional<std::int64_t> ParseInt(std::string_view s);
std::optional<double> ParseDouble(std::string_view s);

// printf-style fixed formatting; locale independent.
std::string FormatFixed(double value, int decimals);

// "round_07" style zero-padded counters used across the results tree.
std::string PadInt(int value, int width);

// True for the id alphabet accepted by the engine: [A-Za-z0-9_-]+.
bool IsValidToken(std::string_view s);

}  // namespace codearena

#endif  // CODEARENA_UTIL_TEXT_HPP_

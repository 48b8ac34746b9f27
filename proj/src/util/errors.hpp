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

#ifndef CODEARENA_UTIL_ERRORS_HPP_
#define CODEARENA_UTIL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace codearena {

// Bad configuration or unusable input data supplied by the caller.
// CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Environment failures: spawn errors, disk problems, arena crashes.
// CLI maps these to exit code 3.
class InfraError : public std::runtime_error {
 public:
  explicit InfraError(const std::string& what) : std::runtime_error(what) {}
};

class ProvisionError : public InfraError {
 public:
  explicit ProvisionError(const std::string& what) : InfraError(what) {}
};

// Degenerate win matrix: some player won or lost everything, the MLE
// diverges.
class SeparationError : public DataError {
 public:
  explicit SeparationError(const std::string& what) : DataError(what) {}
};

class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace codearena

#endif  // CODEARENA_UTIL_ERRORS_HPP_

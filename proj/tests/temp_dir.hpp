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

#ifndef CODEARENA_TESTS_TEMP_DIR_HPP_
#define CODEARENA_TESTS_TEMP_DIR_HPP_

#include <atomic>
#include <filesystem>
#include <string>

#include <unistd.h>

#include "util/fs.hpp"

namespace codearena::testing {

// Unique scratch directory, removed on scope exit.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "scratch") {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("codearena_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { RemoveTreeForced(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace codearena::testing

#endif  // CODEARENA_TESTS_TEMP_DIR_HPP_

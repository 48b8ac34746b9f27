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

#include "util/rng.hpp"

#include <cassert>

namespace codearena {

std::uint64_t MixBits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t master,
                         std::initializer_list<std::uint64_t> context) {
  std::uint64_t h = MixBits(master);
  for (std::uint64_t c : context) {
    h = MixBits(h ^ MixBits(c));
  }
  return h;
}

std::uint64_t Rng::Next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  assert(bound > 0);
  // Reject draws from the final partial block so every value is equally
  // likely.
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = Next();
    if (r >= threshold) return r % bound;
  }
}

double Rng::Uniform01() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

bool Rng::Bernoulli(double p) { return Uniform01() < p; }

int Rng::Binomial(int n, double p) {
  int successes = 0;
  for (int i = 0; i < n; ++i) {
    if (Bernoulli(p)) ++successes;
  }
  return successes;
}

}  // namespace codearena

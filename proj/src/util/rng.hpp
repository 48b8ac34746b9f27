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

#ifndef CODEARENA_UTIL_RNG_HPP_
#define CODEARENA_UTIL_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace codearena {

// SplitMix64 finalizer. Fully specified so that seeded runs reproduce
// byte-identically on every platform; the standard <random> distributions
// make no such guarantee.
std::uint64_t MixBits(std::uint64_t x);

// Derives an independent stream seed from a master seed and a list of
// context values (round index, simulation index, purpose tag, ...).
std::uint64_t DeriveSeed(std::uint64_t master,
                         std::initializer_list<std::uint64_t> context);

// Deterministic PRNG (SplitMix64 sequence) with the handful of draws the
// project needs. Cheap to copy; copies continue the same sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();

  // Uniform integer in [0, bound). bound must be positive. Unbiased
  // (rejection sampling on the top of the range).
  std::uint64_t UniformBelow(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform01();

  bool Bernoulli(double p);

  // Number of successes in n Bernoulli(p) trials.
  int Binomial(int n, double p);

  // Fisher-Yates shuffle, uniform over all permutations.
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(UniformBelow(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace codearena

#endif  // CODEARENA_UTIL_RNG_HPP_

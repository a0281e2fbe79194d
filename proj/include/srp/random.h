// Copyright 2026 The SRP Authors.
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

#ifndef SRP_RANDOM_H_
#define SRP_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace srp {

// All randomness flows through explicitly passed generators of this type.
using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent seeds from
// (master seed, index) pairs.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed for stream `index` under `master`. Depends only on the pair, never on
// how many other streams were created.
constexpr std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index) {
  return Mix64(Mix64(master) ^ Mix64(index + 0x632BE59BD9B4E019ULL));
}

// Draws a fresh generator seeded from the next output of `parent`.
inline Rng SplitRng(Rng& parent) { return Rng(Mix64(parent())); }

// Uniform draw in [0, 1).
inline double Uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Samples an index from a probability row by inverse CDF. The final index
// absorbs any rounding slack in the row sum.
int SampleCategorical(std::span<const double> probs, Rng& rng);

// Writes a Dirichlet(alpha) draw into `out` (same length as alpha).
void SampleDirichlet(std::span<const double> alpha, Rng& rng,
                     std::span<double> out);

// Uniform draw from the probability simplex of dimension n.
std::vector<double> SampleUniformSimplex(int n, Rng& rng);

}  // namespace srp

#endif  // SRP_RANDOM_H_

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

#include "srp/random.h"

#include <algorithm>
#include <cassert>
#include <iterator>

namespace srp {

int SampleCategorical(std::span<const double> probs, Rng& rng) {
  assert(!probs.empty());
  const double u = Uniform01(rng);
  double cumulative = 0.0;
  const int last = static_cast<int>(probs.size()) - 1;
  for (int i = 0; i < last; ++i) {
    cumulative += probs[i];
    if (u < cumulative) return i;
  }
  // Skip trailing zero-probability outcomes left over from rounding.
  int i = last;
  while (i > 0 && probs[i] <= 0.0) --i;
  return i;
}

void SampleDirichlet(std::span<const double> alpha, Rng& rng,
                     std::span<double> out) {
  assert(alpha.size() == out.size());
  double total = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    out[i] = std::gamma_distribution<double>(alpha[i], 1.0)(rng);
    total += out[i];
  }
  if (total > 0.0) {
    for (double& x : out) x /= total;
    return;
  }
  // Every gamma draw underflowed (all concentrations tiny): the limit is a
  // point mass on the largest concentration.
  std::fill(out.begin(), out.end(), 0.0);
  out[std::distance(alpha.begin(),
                    std::max_element(alpha.begin(), alpha.end()))] = 1.0;
}

std::vector<double> SampleUniformSimplex(int n, Rng& rng) {
  std::vector<double> ones(n, 1.0);
  std::vector<double> out(n);
  SampleDirichlet(ones, rng, out);
  return out;
}

}  // namespace srp

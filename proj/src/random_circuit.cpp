// Copyright 2026 The resynth Authors
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

#include "resynth/random_circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "resynth/rng.hpp"

namespace resynth {

MixedPhasePolynomial random_circuit(std::size_t n, std::size_t m,
                                    std::uint64_t seed, bool discrete_angles) {
  if (n < 2) throw std::invalid_argument("random_circuit needs n >= 2");
  if (m < 1) throw std::invalid_argument("random_circuit needs m >= 1");
  Rng rng(seed);
  std::size_t min_legs = static_cast<std::size_t>(
      std::lround(std::sqrt(static_cast<double>(n))));
  if (min_legs < 1) min_legs = 1;
  if (min_legs > n) min_legs = n;

  MixedPhasePolynomial p(n);
  std::vector<int> indices(n);
  while (p.gadgets().size() < m) {
    std::size_t k = min_legs + rng.below(n - min_legs + 1);
    for (std::size_t i = 0; i < n; ++i) indices[i] = static_cast<int>(i);
    BitVec legs(n);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + rng.below(n - i);
      std::swap(indices[i], indices[j]);
      legs.set(static_cast<std::size_t>(indices[i]), true);
    }
    Basis basis = rng.below(2) == 0 ? Basis::Z : Basis::X;
    double angle;
    if (discrete_angles) {
      angle = static_cast<double>(1 + rng.below(7)) * (kTwoPi / 8.0);
    } else {
      angle = rng.unit() * kTwoPi;
      if (angle_is_zero(canonical_angle(angle))) continue;  // redraw
    }
    p.add_gadget(basis, legs, angle);
  }
  return p;
}

}  // namespace resynth

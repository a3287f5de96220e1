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

#pragma once

#include <cstdint>

#include "resynth/phasepoly.hpp"

namespace resynth {

/// m random gadgets on n qubits with identity tail. Each gadget acts on at
/// least round(sqrt(n)) qubits: the leg count is uniform in
/// [round(sqrt(n)), n], the legs a uniform subset of that size, the basis
/// uniform in {Z, X}. Angles default to uniform multiples of pi/4 in
/// {pi/4, ..., 7*pi/4} so files round-trip exactly; pass
/// discrete_angles=false for uniform angles in (0, 2*pi). Deterministic per
/// seed; per-gadget draw order is (legs count, subset, basis, angle).
MixedPhasePolynomial random_circuit(std::size_t n, std::size_t m,
                                    std::uint64_t seed,
                                    bool discrete_angles = true);

}  // namespace resynth

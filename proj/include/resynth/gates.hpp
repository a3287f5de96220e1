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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace resynth {

enum class OpType { CX, RZ, RX };

/// One circuit gate. For CX, q0 is the control and q1 the target; rotations
/// use q0 and angle, with q1 = -1.
struct Gate {
  OpType op;
  int q0 = 0;
  int q1 = -1;
  double angle = 0.0;

  static Gate cx(int control, int target) {
    if (control == target)
      throw std::invalid_argument("CX control and target must differ");
    return Gate{OpType::CX, control, target, 0.0};
  }
  static Gate rz(int qubit, double angle) {
    return Gate{OpType::RZ, qubit, -1, angle};
  }
  static Gate rx(int qubit, double angle) {
    return Gate{OpType::RX, qubit, -1, angle};
  }

  bool is_cx() const { return op == OpType::CX; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

inline std::size_t cnot_count(const std::vector<Gate>& gates) {
  std::size_t c = 0;
  for (const auto& g : gates)
    if (g.is_cx()) ++c;
  return c;
}

}  // namespace resynth

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

/// Bijection from logical qubits to physical registers.
class QubitMapping {
 public:
  QubitMapping() = default;
  explicit QubitMapping(std::size_t n) : perm_(n) {
    for (std::size_t i = 0; i < n; ++i) perm_[i] = static_cast<int>(i);
  }

  static QubitMapping identity(std::size_t n) { return QubitMapping(n); }
  static QubitMapping from_permutation(std::vector<int> perm);

  std::size_t size() const { return perm_.size(); }
  int operator()(int logical) const {
    if (logical < 0 || static_cast<std::size_t>(logical) >= perm_.size())
      throw std::out_of_range("QubitMapping index out of range");
    return perm_[static_cast<std::size_t>(logical)];
  }
  const std::vector<int>& perm() const { return perm_; }

  QubitMapping inverse() const;
  /// compose(outer, inner)(q) == outer(inner(q)).
  static QubitMapping compose(const QubitMapping& outer,
                              const QubitMapping& inner);

  bool is_identity() const;
  std::string to_string() const;  // comma-separated images

  friend bool operator==(const QubitMapping&, const QubitMapping&) = default;

 private:
  std::vector<int> perm_;
};

}  // namespace resynth

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

#include "resynth/mapping.hpp"

namespace resynth {

QubitMapping QubitMapping::from_permutation(std::vector<int> perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[p])
      throw std::invalid_argument("QubitMapping: not a permutation");
    seen[p] = 1;
  }
  QubitMapping m;
  m.perm_ = std::move(perm);
  return m;
}

QubitMapping QubitMapping::inverse() const {
  std::vector<int> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i)
    inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
  return from_permutation(std::move(inv));
}

QubitMapping QubitMapping::compose(const QubitMapping& outer,
                                   const QubitMapping& inner) {
  if (outer.size() != inner.size())
    throw std::invalid_argument("QubitMapping compose size mismatch");
  std::vector<int> perm(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    perm[i] = outer(inner.perm_[i]);
  return from_permutation(std::move(perm));
}

bool QubitMapping::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string QubitMapping::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(perm_[i]);
  }
  return s;
}

}  // namespace resynth

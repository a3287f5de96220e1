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

#include <limits>
#include <vector>

#include "internal/synth_state.hpp"

namespace resynth::internal {

namespace {

int choose_root(const SteinerTree& tree) {
  int best = -1, best_depth = std::numeric_limits<int>::max();
  for (int term : tree.terminals) {
    int d = tree_depth(tree, term);
    if (d < best_depth) {
      best = term;
      best_depth = d;
    }
  }
  return best;
}

}  // namespace

// Greedy parity ordering: repeatedly pick the remaining gadget whose support
// (in the current pushed-through state) has the cheapest approximate Steiner
// tree, reduce it onto the tree root with a fill sweep and a leaves-to-root
// clear sweep, emit the rotation, and leave the linear residue in the state.
void paritysynth_region(SynthState& st, const std::vector<std::size_t>& region,
                        Basis basis) {
  const Topology& topo = st.topo();
  std::vector<std::size_t> remaining;
  for (std::size_t id : region)
    if (st.alive(id)) remaining.push_back(id);

  while (!remaining.empty()) {
    std::size_t best_pos = 0;
    SteinerTree best_tree;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      std::size_t id = remaining[pos];
      if (st.legs(id).count() == 1) {
        best_pos = pos;
        best_tree = SteinerTree{st.legs(id).support(), {}};
        best_cost = 0;
        break;
      }
      SteinerTree tree = steiner_approx(topo, st.legs(id).support());
      if (tree.edges.size() < best_cost) {
        best_cost = tree.edges.size();
        best_pos = pos;
        best_tree = std::move(tree);
      }
    }

    std::size_t id = remaining[best_pos];
    if (st.legs(id).count() == 1) {
      st.emit_rotation(id, st.legs(id).first_set());
      remaining.erase(remaining.begin() + static_cast<long>(best_pos));
      continue;
    }

    int root = choose_root(best_tree);
    RootedTree rooted = root_tree(best_tree, root);
    // Fill: give every Steiner vertex the parity bit, top-down.
    for (auto [u, w] : rooted.preorder_edges)
      if (!st.legs(id).get(static_cast<std::size_t>(w)))
        st.add_into(basis, w, u);
    // Clear: fold every vertex into its parent, leaves first.
    for (auto it = rooted.preorder_edges.rbegin();
         it != rooted.preorder_edges.rend(); ++it)
      st.add_into(basis, it->second, it->first);

    st.emit_rotation(id, root);
    remaining.erase(remaining.begin() + static_cast<long>(best_pos));
  }
}

}  // namespace resynth::internal

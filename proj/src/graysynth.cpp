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

#include <algorithm>
#include <vector>

#include "internal/synth_state.hpp"

namespace resynth::internal {

namespace {

// Reduces one parity to a single leg by repeatedly merging its two closest
// legs along shortest paths inside `universe` (falling back to the whole
// graph when the universe disconnects the support), then emits the rotation
// on the surviving leg. The adjacent merge clears the lower-indexed leg into
// the higher one; a distant pair walks the lower leg one step at a time.
void gather_single(SynthState& st, std::size_t id, Basis basis,
                   const std::vector<char>& base_universe) {
  const Topology& topo = st.topo();
  std::size_t n = topo.num_qubits();
  while (st.legs(id).count() > 1) {
    std::vector<int> legs = st.legs(id).support();
    std::vector<char> universe = base_universe;
    for (int l : legs) universe[static_cast<std::size_t>(l)] = 1;

    int best_a = -1, best_b = -1, best_d = -1;
    auto scan = [&](const std::vector<char>& uni) {
      best_a = best_b = -1;
      best_d = -1;
      for (std::size_t i = 0; i < legs.size(); ++i) {
        SubgraphBfs bfs = bfs_within(topo, uni, legs[i]);
        for (std::size_t j = i + 1; j < legs.size(); ++j) {
          int d = bfs.dist[static_cast<std::size_t>(legs[j])];
          if (d < 0) continue;
          if (best_d < 0 || d < best_d) {
            best_d = d;
            best_a = legs[i];
            best_b = legs[j];
          }
        }
      }
    };
    scan(universe);
    if (best_d < 0) {
      std::vector<char> all(n, 1);
      universe = all;
      scan(universe);
    }

    if (best_d == 1) {
      st.add_into(basis, best_a, best_b);
    } else {
      std::vector<int> path = path_within(topo, universe, best_a, best_b);
      int step = path[1];
      st.add_into(basis, step, best_a);
      st.add_into(basis, best_a, step);
    }
  }
  st.emit_rotation(id, st.legs(id).first_set());
}

struct Node {
  std::vector<std::size_t> parities;
  std::vector<int> qubits;  // splitting/routing set, ascending
  int target;               // -1 while unassigned
};

}  // namespace

// Architecture-aware GraySynth over one commuting region. Recursion splits
// the parity set on the qubit whose bit value is most frequent (ties: lowest
// index); only non-cut vertices of the remaining subgraph are removed from
// the recursion set. Common all-ones columns are cleared into the node
// target through exact long-range additions over shortest paths restricted
// to the current qubit set; single parities are finished by gather_single.
void graysynth_region(SynthState& st, const std::vector<std::size_t>& region,
                      Basis basis) {
  const Topology& topo = st.topo();
  std::size_t n = topo.num_qubits();

  std::vector<int> all_qubits(n);
  for (std::size_t i = 0; i < n; ++i) all_qubits[i] = static_cast<int>(i);

  std::vector<Node> stack;
  stack.push_back(Node{region, all_qubits, -1});

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();

    std::vector<std::size_t> parities;
    for (std::size_t id : node.parities)
      if (st.alive(id)) parities.push_back(id);
    if (parities.empty()) continue;
    int t = node.target;

    std::vector<char> universe(n, 0);
    for (int q : node.qubits) universe[static_cast<std::size_t>(q)] = 1;
    if (t >= 0) universe[static_cast<std::size_t>(t)] = 1;

    if (t >= 0) {
      auto extract_ready = [&]() {
        std::vector<std::size_t> keep;
        for (std::size_t id : parities) {
          if (st.legs(id).count() == 1 &&
              st.legs(id).get(static_cast<std::size_t>(t)))
            st.emit_rotation(id, t);
          else
            keep.push_back(id);
        }
        parities = std::move(keep);
      };
      extract_ready();
      if (parities.empty()) continue;

      if (parities.size() == 1) {
        gather_single(st, parities.front(), basis, universe);
        continue;
      }

      // Shared clears need every parity to still hold the target bit.
      bool target_column_ones = true;
      for (std::size_t id : parities)
        if (!st.legs(id).get(static_cast<std::size_t>(t)))
          target_column_ones = false;
      if (target_column_ones) {
        for (std::size_t j = 0; j < n; ++j) {
          if (static_cast<int>(j) == t) continue;
          bool all_ones = true;
          for (std::size_t id : parities)
            if (!st.legs(id).get(j)) all_ones = false;
          if (!all_ones) continue;
          std::vector<char> route = universe;
          route[j] = 1;
          std::vector<int> path =
              path_within(topo, route, static_cast<int>(j), t);
          if (path.empty()) continue;
          st.add_into_long_range(basis, path);
        }
        extract_ready();
        if (parities.empty()) continue;
        if (parities.size() == 1) {
          gather_single(st, parities.front(), basis, universe);
          continue;
        }
      }
    } else if (parities.size() == 1) {
      gather_single(st, parities.front(), basis, universe);
      continue;
    }

    // Split on the most informative available qubit.
    std::vector<int> candidates;
    if (!node.qubits.empty()) {
      std::vector<int> alive_vertices = node.qubits;
      if (t >= 0) {
        alive_vertices.push_back(t);
        std::sort(alive_vertices.begin(), alive_vertices.end());
      }
      std::vector<int> cuts = cut_vertices(topo, alive_vertices);
      for (int q : node.qubits)
        if (!std::binary_search(cuts.begin(), cuts.end(), q))
          candidates.push_back(q);
    }
    if (candidates.empty()) {
      for (std::size_t id : parities) gather_single(st, id, basis, universe);
      continue;
    }

    int best_q = -1;
    std::size_t best_count = 0;
    for (int q : candidates) {
      std::size_t ones = 0;
      for (std::size_t id : parities)
        if (st.legs(id).get(static_cast<std::size_t>(q))) ++ones;
      std::size_t majority = std::max(ones, parities.size() - ones);
      if (best_q < 0 || majority > best_count) {
        best_q = q;
        best_count = majority;
      }
    }

    std::vector<std::size_t> with, without;
    for (std::size_t id : parities) {
      if (st.legs(id).get(static_cast<std::size_t>(best_q)))
        with.push_back(id);
      else
        without.push_back(id);
    }
    std::vector<int> rest;
    for (int q : node.qubits)
      if (q != best_q) rest.push_back(q);

    // LIFO order: the zero branch runs to completion before the one branch's
    // clears touch the split column.
    stack.push_back(Node{std::move(with), rest, t < 0 ? best_q : t});
    stack.push_back(Node{std::move(without), rest, t});
  }
}

}  // namespace resynth::internal

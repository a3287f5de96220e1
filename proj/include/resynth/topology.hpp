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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace resynth {

/// Undirected connected coupling graph with cached all-pairs shortest paths.
/// Distances are unweighted hop counts; the distance table is the single
/// extension point for fidelity-weighted variants.
class Topology {
 public:
  /// Rejects disconnected graphs and self-loops; duplicate edges are
  /// deduplicated.
  static Topology from_edge_list(std::size_t n,
                                 std::vector<std::pair<int, int>> edges);
  /// line-k, ring-k, grid-RxC, or one of the bundled device graphs
  /// (valencia, yorktown, melbourne, johannesburg, singapore).
  static Topology named(const std::string& name);
  static Topology from_file(const std::string& path);
  static Topology parse_edge_list(std::istream& in);
  static Topology complete(std::size_t n);

  std::size_t num_qubits() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int u) const;
  int dist(int u, int v) const;
  /// Min-index predecessor of v on a shortest path from src (-1 if v==src).
  int pred(int src, int v) const;
  /// Vertex sequence from u to v inclusive along shortest paths.
  std::vector<int> shortest_path(int u, int v) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<int>> pred_;

  void build_tables();
  void check_vertex(int u) const;
};

/// Tree inside the topology spanning a terminal set, possibly through
/// non-terminal vertices.
struct SteinerTree {
  std::vector<int> terminals;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted

  std::vector<int> vertices() const;
  bool contains_vertex(int v) const;
};

/// Rooted view of a Steiner tree: preorder vertex/edge lists for sweeps.
struct RootedTree {
  int root = -1;
  std::vector<int> preorder;                      // vertices, root first
  std::vector<std::pair<int, int>> preorder_edges;  // (parent, child)
  std::vector<int> parent;                        // indexed by vertex, -1 unset
};

RootedTree root_tree(const SteinerTree& tree, int root);
int tree_depth(const SteinerTree& tree, int root);
/// Path between two tree vertices along tree edges.
std::vector<int> tree_path(const SteinerTree& tree, int from, int to);

/// Metric-closure MST approximation of a minimum Steiner tree, restricted to
/// the vertex subset `universe` (every vertex of the result lies in it).
/// Deterministic: MST ties break on (distance, lexicographic terminal pair),
/// shortest-path ties on smallest predecessor index.
SteinerTree steiner_within(const Topology& t, const std::vector<char>& universe,
                           const std::vector<int>& terminals);
SteinerTree steiner_approx(const Topology& t, const std::vector<int>& terminals);

/// Articulation points of the subgraph induced on `alive`, via DFS low-link.
/// Throws std::invalid_argument if the induced subgraph is disconnected.
std::vector<int> cut_vertices(const Topology& t, const std::vector<int>& alive);

/// BFS distances/predecessors inside an induced subgraph. dist is -1 where
/// unreachable; pred[v] is the smallest-index neighbor one step closer.
struct SubgraphBfs {
  std::vector<int> dist;
  std::vector<int> pred;
};
SubgraphBfs bfs_within(const Topology& t, const std::vector<char>& universe,
                       int src);
/// Shortest path inside an induced subgraph; empty if unreachable.
std::vector<int> path_within(const Topology& t, const std::vector<char>& universe,
                             int from, int to);

}  // namespace resynth

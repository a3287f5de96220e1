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

#include "resynth/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace resynth {

namespace {

#ifndef RESYNTH_DATA_DIR
#define RESYNTH_DATA_DIR ""
#endif

std::string data_dir() {
  if (const char* env = std::getenv("RESYNTH_DATA_DIR")) return env;
  return RESYNTH_DATA_DIR;
}

bool parse_sized_name(const std::string& name, const std::string& prefix,
                      long* k) {
  if (name.rfind(prefix, 0) != 0) return false;
  const std::string rest = name.substr(prefix.size());
  if (rest.empty()) return false;
  char* end = nullptr;
  *k = std::strtol(rest.c_str(), &end, 10);
  return end && *end == '\0' && *k > 0;
}

}  // namespace

Topology Topology::from_edge_list(std::size_t n,
                                  std::vector<std::pair<int, int>> edges) {
  if (n == 0) throw std::invalid_argument("topology needs at least 1 qubit");
  std::set<std::pair<int, int>> uniq;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= static_cast<int>(n) || v >= static_cast<int>(n))
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    uniq.insert({std::min(u, v), std::max(u, v)});
  }
  Topology t;
  t.n_ = n;
  t.edges_.assign(uniq.begin(), uniq.end());
  t.build_tables();
  return t;
}

void Topology::build_tables() {
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  dist_.assign(n_, std::vector<int>(n_, -1));
  for (std::size_t s = 0; s < n_; ++s) {
    auto& d = dist_[s];
    d[s] = 0;
    std::deque<int> q{static_cast<int>(s)};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (d[static_cast<std::size_t>(v)] < 0) {
          d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
          q.push_back(v);
        }
    }
    for (std::size_t v = 0; v < n_; ++v)
      if (d[v] < 0)
        throw std::invalid_argument("topology graph must be connected");
  }

  pred_.assign(n_, std::vector<int>(n_, -1));
  for (std::size_t s = 0; s < n_; ++s)
    for (std::size_t v = 0; v < n_; ++v) {
      if (v == s) continue;
      for (int w : adj_[v])
        if (dist_[s][static_cast<std::size_t>(w)] == dist_[s][v] - 1) {
          pred_[s][v] = w;
          break;  // neighbors sorted: smallest predecessor index
        }
    }
}

void Topology::check_vertex(int u) const {
  if (u < 0 || u >= static_cast<int>(n_))
    throw std::out_of_range("vertex index out of range");
}

bool Topology::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == 1;
}

const std::vector<int>& Topology::neighbors(int u) const {
  check_vertex(u);
  return adj_[static_cast<std::size_t>(u)];
}

int Topology::dist(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

int Topology::pred(int src, int v) const {
  check_vertex(src);
  check_vertex(v);
  return pred_[static_cast<std::size_t>(src)][static_cast<std::size_t>(v)];
}

std::vector<int> Topology::shortest_path(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  std::vector<int> path{v};
  while (path.back() != u) path.push_back(pred(u, path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

Topology Topology::complete(std::size_t n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < static_cast<int>(n); ++u)
    for (int v = u + 1; v < static_cast<int>(n); ++v) edges.push_back({u, v});
  return from_edge_list(n, std::move(edges));
}

Topology Topology::parse_edge_list(std::istream& in) {
  std::string line;
  long n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (tok == "nodes") {
      if (!(ss >> n) || n <= 0)
        throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                    ": bad node count");
    } else {
      int u = 0, v = 0;
      try {
        u = std::stoi(tok);
      } catch (...) {
        throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                    ": expected vertex index");
      }
      if (!(ss >> v))
        throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                    ": expected edge pair");
      edges.push_back({u, v});
    }
  }
  if (n < 0)
    throw std::invalid_argument("edge list is missing a 'nodes <n>' line");
  return from_edge_list(static_cast<std::size_t>(n), std::move(edges));
}

Topology Topology::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list file: " + path);
  return parse_edge_list(in);
}

Topology Topology::named(const std::string& name) {
  long k = 0;
  if (parse_sized_name(name, "line-", &k)) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    return from_edge_list(static_cast<std::size_t>(k), std::move(edges));
  }
  if (parse_sized_name(name, "ring-", &k)) {
    if (k < 3) throw std::invalid_argument("ring needs at least 3 qubits");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    edges.push_back({static_cast<int>(k) - 1, 0});
    return from_edge_list(static_cast<std::size_t>(k), std::move(edges));
  }
  if (name.rfind("grid-", 0) == 0) {
    auto x = name.find('x', 5);
    if (x != std::string::npos) {
      long rows = std::strtol(name.substr(5, x - 5).c_str(), nullptr, 10);
      long cols = std::strtol(name.substr(x + 1).c_str(), nullptr, 10);
      if (rows > 0 && cols > 0) {
        std::vector<std::pair<int, int>> edges;
        auto id = [&](long r, long c) { return static_cast<int>(r * cols + c); };
        for (long r = 0; r < rows; ++r)
          for (long c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
          }
        return from_edge_list(static_cast<std::size_t>(rows * cols),
                              std::move(edges));
      }
    }
    throw std::invalid_argument("bad grid name (expected grid-RxC): " + name);
  }
  static const char* kDevices[] = {"valencia", "yorktown", "melbourne",
                                   "johannesburg", "singapore"};
  for (const char* dev : kDevices)
    if (name == dev) {
      std::string base = data_dir();
      if (base.empty())
        throw std::runtime_error(
            "no data directory configured for device graphs (set "
            "RESYNTH_DATA_DIR)");
      return from_file(base + "/topologies/" + name + ".edgelist");
    }
  throw std::invalid_argument(
      "unknown topology '" + name +
      "' (expected line-k, ring-k, grid-RxC, valencia, yorktown, melbourne, "
      "johannesburg or singapore)");
}

std::vector<int> SteinerTree::vertices() const {
  std::set<int> vs(terminals.begin(), terminals.end());
  for (auto [u, v] : edges) {
    vs.insert(u);
    vs.insert(v);
  }
  return {vs.begin(), vs.end()};
}

bool SteinerTree::contains_vertex(int v) const {
  if (std::find(terminals.begin(), terminals.end(), v) != terminals.end())
    return true;
  for (auto [a, b] : edges)
    if (a == v || b == v) return true;
  return false;
}

namespace {

std::vector<std::vector<int>> tree_adjacency(const SteinerTree& tree) {
  int maxv = -1;
  for (int t : tree.terminals) maxv = std::max(maxv, t);
  for (auto [u, v] : tree.edges) maxv = std::max({maxv, u, v});
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(maxv + 1));
  for (auto [u, v] : tree.edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

RootedTree root_tree(const SteinerTree& tree, int root) {
  if (!tree.contains_vertex(root))
    throw std::invalid_argument("root is not a tree vertex");
  auto adj = tree_adjacency(tree);
  RootedTree rt;
  rt.root = root;
  rt.parent.assign(adj.size(), -1);
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{root};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    rt.preorder.push_back(u);
    if (u != root) rt.preorder_edges.push_back({rt.parent[static_cast<std::size_t>(u)], u});
    const auto& nb = adj[static_cast<std::size_t>(u)];
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (!seen[static_cast<std::size_t>(*it)]) {
        seen[static_cast<std::size_t>(*it)] = 1;
        rt.parent[static_cast<std::size_t>(*it)] = u;
        stack.push_back(*it);
      }
  }
  return rt;
}

int tree_depth(const SteinerTree& tree, int root) {
  auto adj = tree_adjacency(tree);
  std::vector<int> d(adj.size(), -1);
  d[static_cast<std::size_t>(root)] = 0;
  std::deque<int> q{root};
  int depth = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    depth = std::max(depth, d[static_cast<std::size_t>(u)]);
    for (int v : adj[static_cast<std::size_t>(u)])
      if (d[static_cast<std::size_t>(v)] < 0) {
        d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
        q.push_back(v);
      }
  }
  return depth;
}

std::vector<int> tree_path(const SteinerTree& tree, int from, int to) {
  RootedTree rt = root_tree(tree, from);
  std::vector<int> path{to};
  while (path.back() != from) {
    int p = rt.parent[static_cast<std::size_t>(path.back())];
    if (p < 0) throw std::logic_error("tree_path: disconnected tree");
    path.push_back(p);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

SubgraphBfs bfs_within(const Topology& t, const std::vector<char>& universe,
                       int src) {
  std::size_t n = t.num_qubits();
  SubgraphBfs out;
  out.dist.assign(n, -1);
  out.pred.assign(n, -1);
  if (!universe[static_cast<std::size_t>(src)])
    throw std::invalid_argument("bfs_within: source not in universe");
  out.dist[static_cast<std::size_t>(src)] = 0;
  std::deque<int> q{src};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : t.neighbors(u))
      if (universe[static_cast<std::size_t>(v)] &&
          out.dist[static_cast<std::size_t>(v)] < 0) {
        out.dist[static_cast<std::size_t>(v)] =
            out.dist[static_cast<std::size_t>(u)] + 1;
        q.push_back(v);
      }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (out.dist[v] <= 0) continue;
    for (int w : t.neighbors(static_cast<int>(v)))
      if (universe[static_cast<std::size_t>(w)] &&
          out.dist[static_cast<std::size_t>(w)] == out.dist[v] - 1) {
        out.pred[v] = w;
        break;
      }
  }
  return out;
}

std::vector<int> path_within(const Topology& t, const std::vector<char>& universe,
                             int from, int to) {
  auto bfs = bfs_within(t, universe, from);
  if (bfs.dist[static_cast<std::size_t>(to)] < 0) return {};
  std::vector<int> path{to};
  while (path.back() != from)
    path.push_back(bfs.pred[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

SteinerTree steiner_within(const Topology& t, const std::vector<char>& universe,
                           const std::vector<int>& terminals) {
  if (terminals.empty())
    throw std::invalid_argument("steiner tree needs at least one terminal");
  std::vector<int> terms = terminals;
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  for (int v : terms) {
    if (v < 0 || v >= static_cast<int>(t.num_qubits()))
      throw std::out_of_range("terminal out of range");
    if (!universe[static_cast<std::size_t>(v)])
      throw std::invalid_argument("terminal not in universe");
  }
  SteinerTree tree;
  tree.terminals = terms;
  if (terms.size() == 1) return tree;

  // Metric closure distances within the universe.
  std::vector<SubgraphBfs> bfs;
  bfs.reserve(terms.size());
  for (int v : terms) bfs.push_back(bfs_within(t, universe, v));

  struct PairEdge {
    int d, u, v;  // u, v are indices into terms
  };
  std::vector<PairEdge> pairs;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      int d = bfs[i].dist[static_cast<std::size_t>(terms[j])];
      if (d < 0)
        throw std::invalid_argument(
            "terminals are disconnected inside the universe");
      pairs.push_back({d, static_cast<int>(i), static_cast<int>(j)});
    }
  std::sort(pairs.begin(), pairs.end(), [&](const PairEdge& a, const PairEdge& b) {
    if (a.d != b.d) return a.d < b.d;
    if (terms[static_cast<std::size_t>(a.u)] != terms[static_cast<std::size_t>(b.u)])
      return terms[static_cast<std::size_t>(a.u)] < terms[static_cast<std::size_t>(b.u)];
    return terms[static_cast<std::size_t>(a.v)] < terms[static_cast<std::size_t>(b.v)];
  });

  // Kruskal over the metric closure.
  std::vector<int> dsu(terms.size());
  for (std::size_t i = 0; i < dsu.size(); ++i) dsu[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (dsu[static_cast<std::size_t>(x)] != x) {
      dsu[static_cast<std::size_t>(x)] = dsu[static_cast<std::size_t>(dsu[static_cast<std::size_t>(x)])];
      x = dsu[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::set<std::pair<int, int>> edge_set;
  for (const auto& pe : pairs) {
    int ru = find(pe.u), rv = find(pe.v);
    if (ru == rv) continue;
    dsu[static_cast<std::size_t>(ru)] = rv;
    // Expand the closure edge along a shortest path (min-index predecessors).
    const auto& b = bfs[static_cast<std::size_t>(pe.u)];
    int cur = terms[static_cast<std::size_t>(pe.v)];
    while (cur != terms[static_cast<std::size_t>(pe.u)]) {
      int prev = b.pred[static_cast<std::size_t>(cur)];
      edge_set.insert({std::min(cur, prev), std::max(cur, prev)});
      cur = prev;
    }
  }

  // The union of paths may contain cycles; take a BFS spanning tree and
  // prune non-terminal leaves.
  std::vector<std::vector<int>> adj(t.num_qubits());
  for (auto [u, v] : edge_set) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::set<std::pair<int, int>> tree_edges;
  std::vector<char> seen(t.num_qubits(), 0);
  std::deque<int> q{terms.front()};
  seen[static_cast<std::size_t>(terms.front())] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        tree_edges.insert({std::min(u, v), std::max(u, v)});
        q.push_back(v);
      }
  }

  std::vector<char> is_terminal(t.num_qubits(), 0);
  for (int v : terms) is_terminal[static_cast<std::size_t>(v)] = 1;
  bool pruned = true;
  while (pruned) {
    pruned = false;
    std::vector<int> degree(t.num_qubits(), 0);
    for (auto [u, v] : tree_edges) {
      degree[static_cast<std::size_t>(u)]++;
      degree[static_cast<std::size_t>(v)]++;
    }
    for (auto it = tree_edges.begin(); it != tree_edges.end();) {
      auto [u, v] = *it;
      bool u_leaf = degree[static_cast<std::size_t>(u)] == 1 &&
                    !is_terminal[static_cast<std::size_t>(u)];
      bool v_leaf = degree[static_cast<std::size_t>(v)] == 1 &&
                    !is_terminal[static_cast<std::size_t>(v)];
      if (u_leaf || v_leaf) {
        it = tree_edges.erase(it);
        pruned = true;
      } else {
        ++it;
      }
    }
  }

  tree.edges.assign(tree_edges.begin(), tree_edges.end());
  return tree;
}

SteinerTree steiner_approx(const Topology& t, const std::vector<int>& terminals) {
  std::vector<char> universe(t.num_qubits(), 1);
  return steiner_within(t, universe, terminals);
}

std::vector<int> cut_vertices(const Topology& t, const std::vector<int>& alive) {
  if (alive.empty()) return {};
  std::size_t n = t.num_qubits();
  std::vector<char> in(n, 0);
  for (int v : alive) {
    if (v < 0 || v >= static_cast<int>(n))
      throw std::out_of_range("alive vertex out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  auto bfs = bfs_within(t, in, alive.front());
  for (int v : alive)
    if (bfs.dist[static_cast<std::size_t>(v)] < 0)
      throw std::invalid_argument(
          "cut_vertices: induced subgraph is disconnected");

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    for (int v : t.neighbors(u)) {
      if (!in[static_cast<std::size_t>(v)] || v == parent) continue;
      if (disc[static_cast<std::size_t>(v)] < 0) {
        ++children;
        dfs(v, u);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if (parent >= 0 && low[static_cast<std::size_t>(v)] >=
                               disc[static_cast<std::size_t>(u)])
          is_cut[static_cast<std::size_t>(u)] = 1;
      } else {
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
      }
    }
    if (parent < 0 && children > 1) is_cut[static_cast<std::size_t>(u)] = 1;
  };
  dfs(alive.front(), -1);

  std::vector<int> cuts;
  for (int v : alive)
    if (is_cut[static_cast<std::size_t>(v)]) cuts.push_back(v);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace resynth

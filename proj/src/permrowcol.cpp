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

#include <functional>
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "resynth/synthesis.hpp"

namespace resynth {

namespace {

// Solves sum_{i in S} row_i|cols == target|cols over the given candidate
// rows; the active submatrix is invertible so the solution is unique.
std::vector<int> row_combination(const ParityMatrix& m,
                                 const std::vector<int>& candidate_rows,
                                 const std::vector<int>& cols,
                                 const BitVec& target) {
  std::size_t nvars = candidate_rows.size();
  std::size_t neqs = cols.size();
  // Equation e: sum_j m[row_j][col_e] * x_j = target[col_e]; pack each
  // equation's coefficients plus rhs into a BitVec of length nvars+1.
  std::vector<BitVec> eqs;
  eqs.reserve(neqs);
  for (std::size_t e = 0; e < neqs; ++e) {
    BitVec row(nvars + 1);
    for (std::size_t j = 0; j < nvars; ++j)
      if (m.get(static_cast<std::size_t>(candidate_rows[j]),
                static_cast<std::size_t>(cols[e])))
        row.set(j, true);
    if (target.get(static_cast<std::size_t>(cols[e]))) row.set(nvars, true);
    eqs.push_back(std::move(row));
  }
  std::vector<int> pivot_of_var(nvars, -1);
  std::size_t r = 0;
  for (std::size_t v = 0; v < nvars && r < eqs.size(); ++v) {
    std::size_t pivot = eqs.size();
    for (std::size_t i = r; i < eqs.size(); ++i)
      if (eqs[i].get(v)) {
        pivot = i;
        break;
      }
    if (pivot == eqs.size()) continue;
    std::swap(eqs[r], eqs[pivot]);
    for (std::size_t i = 0; i < eqs.size(); ++i)
      if (i != r && eqs[i].get(v)) eqs[i] ^= eqs[r];
    pivot_of_var[v] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t i = r; i < eqs.size(); ++i)
    if (eqs[i].get(nvars))
      throw std::logic_error("permrowcol: inconsistent row combination");
  std::vector<int> chosen;
  for (std::size_t v = 0; v < nvars; ++v)
    if (pivot_of_var[v] >= 0 &&
        eqs[static_cast<std::size_t>(pivot_of_var[v])].get(nvars))
      chosen.push_back(candidate_rows[v]);
  return chosen;
}

}  // namespace

PermRowColResult permrowcol(const ParityMatrix& m, const Topology& t) {
  std::size_t n = m.size();
  if (n != t.num_qubits())
    throw std::invalid_argument("permrowcol: matrix/topology size mismatch");
  if (!m.invertible())
    throw SingularMatrixError("permrowcol requires an invertible matrix");

  ParityMatrix a = m;
  std::vector<std::pair<int, int>> ops;  // (control, target) row operations
  auto row_add = [&](int src, int dst) {
    // row[dst] ^= row[src], i.e. CX(src, dst).
    a.cnot(static_cast<std::size_t>(src), static_cast<std::size_t>(dst));
    ops.emplace_back(src, dst);
  };
  // Accumulates the original rows of `wanted` terminals into the tree root:
  // a terminal child is folded into its parent once; a Steiner child is
  // added before and after its own subtree accumulates, which cancels its
  // original row from the flow. Non-root rows are left mutated; the
  // elimination simply continues on them.
  auto tree_accumulate = [&](const SteinerTree& tree, int root,
                             const std::vector<char>& wanted) {
    RootedTree rooted = root_tree(tree, root);
    std::vector<std::vector<int>> children(a.size());
    for (auto [u, w] : rooted.preorder_edges)
      children[static_cast<std::size_t>(u)].push_back(w);
    std::vector<char> carries(a.size(), 0);
    for (auto it = rooted.preorder.rbegin(); it != rooted.preorder.rend();
         ++it) {
      carries[static_cast<std::size_t>(*it)] |= wanted[static_cast<std::size_t>(*it)];
      for (int c : children[static_cast<std::size_t>(*it)])
        carries[static_cast<std::size_t>(*it)] |= carries[static_cast<std::size_t>(c)];
    }
    std::function<void(int)> rec = [&](int v) {
      for (int c : children[static_cast<std::size_t>(v)]) {
        if (!carries[static_cast<std::size_t>(c)]) continue;
        if (wanted[static_cast<std::size_t>(c)]) {
          rec(c);
          row_add(c, v);
        } else {
          row_add(c, v);
          rec(c);
          row_add(c, v);
        }
      }
    };
    rec(root);
  };

  std::vector<int> assignment(n, -1);  // column -> register
  std::vector<char> row_active(n, 1), col_active(n, 1);
  std::vector<int> vertices(n);
  for (std::size_t i = 0; i < n; ++i) vertices[i] = static_cast<int>(i);

  while (vertices.size() > 1) {
    std::vector<int> cuts = cut_vertices(t, vertices);
    std::vector<int> candidates;
    for (int v : vertices)
      if (!std::binary_search(cuts.begin(), cuts.end(), v))
        candidates.push_back(v);
    if (candidates.empty())
      throw std::logic_error("permrowcol: no removable vertex");

    std::vector<int> active_cols;
    for (std::size_t c = 0; c < n; ++c)
      if (col_active[c]) active_cols.push_back(static_cast<int>(c));

    // Pivot: non-cut register minimizing row weight plus the weight of its
    // lightest incident column; ties broken by lowest index.
    int best_r = -1, best_c = -1;
    std::size_t best_score = 0;
    for (int r : candidates) {
      std::size_t roww = 0;
      for (int c : active_cols)
        if (a.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))
          ++roww;
      int cand_c = -1;
      std::size_t colw = 0;
      for (int c : active_cols) {
        if (!a.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))
          continue;
        std::size_t w = 0;
        for (int rr : vertices)
          if (a.get(static_cast<std::size_t>(rr), static_cast<std::size_t>(c)))
            ++w;
        if (cand_c < 0 || w < colw) {
          cand_c = c;
          colw = w;
        }
      }
      if (cand_c < 0) throw std::logic_error("permrowcol: zero active row");
      std::size_t score = roww + colw;
      if (best_r < 0 || score < best_score) {
        best_r = r;
        best_c = cand_c;
        best_score = score;
      }
    }
    int r = best_r, c = best_c;

    std::vector<char> universe(n, 0);
    for (int v : vertices) universe[static_cast<std::size_t>(v)] = 1;

    // Column elimination: col c -> e_r via a Steiner tree over the rows that
    // hold a 1 (fill the tree top-down, then clear it bottom-up).
    std::vector<int> terminals;
    for (int rr : vertices)
      if (a.get(static_cast<std::size_t>(rr), static_cast<std::size_t>(c)))
        terminals.push_back(rr);
    if (!(terminals.size() == 1 && terminals.front() == r)) {
      if (std::find(terminals.begin(), terminals.end(), r) == terminals.end())
        terminals.push_back(r);
      SteinerTree tree = steiner_within(t, universe, terminals);
      RootedTree rooted = root_tree(tree, r);
      for (auto [u, w] : rooted.preorder_edges)
        if (!a.get(static_cast<std::size_t>(w), static_cast<std::size_t>(c)))
          row_add(u, w);
      for (auto it = rooted.preorder_edges.rbegin();
           it != rooted.preorder_edges.rend(); ++it)
        row_add(it->first, it->second);
    }

    // Row elimination: row r -> e_c by accumulating the unique row
    // combination that sums to row_r + e_c over a Steiner tree spanning it.
    BitVec target = a.row(static_cast<std::size_t>(r));
    target.flip(static_cast<std::size_t>(c));
    if (target.any()) {
      std::vector<int> others;
      for (int rr : vertices)
        if (rr != r) others.push_back(rr);
      std::vector<int> combo = row_combination(a, others, active_cols, target);
      if (!combo.empty()) {
        std::vector<int> terms = combo;
        terms.push_back(r);
        SteinerTree tree = steiner_within(t, universe, terms);
        std::vector<char> wanted(n, 0);
        for (int src : combo) wanted[static_cast<std::size_t>(src)] = 1;
        tree_accumulate(tree, r, wanted);
      }
    }

    assignment[static_cast<std::size_t>(c)] = r;
    row_active[static_cast<std::size_t>(r)] = 0;
    col_active[static_cast<std::size_t>(c)] = 0;
    vertices.erase(std::find(vertices.begin(), vertices.end(), r));
  }

  // Last register keeps the last column.
  int last_c = -1;
  for (std::size_t c = 0; c < n; ++c)
    if (col_active[c]) last_c = static_cast<int>(c);
  assignment[static_cast<std::size_t>(last_c)] = vertices.front();

  // Sanity: the remaining matrix must be exactly the recorded permutation.
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t rr = 0; rr < n; ++rr)
      if (a.get(rr, c) !=
          (static_cast<int>(rr) == assignment[c]))
        throw std::logic_error("permrowcol: elimination did not converge");

  PermRowColResult result;
  result.gates.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    result.gates.push_back(Gate::cx(it->first, it->second));
  result.mapping = QubitMapping::from_permutation(assignment);
  return result;
}

std::vector<Gate> gauss_network(const ParityMatrix& m) {
  std::vector<Gate> gates;
  for (auto [c, t] : elimination_cnots(m)) gates.push_back(Gate::cx(c, t));
  return gates;
}

}  // namespace resynth

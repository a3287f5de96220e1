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

#include "resynth/gf2.hpp"

#include <bit>

namespace resynth {

BitVec BitVec::unit(std::size_t n, std::size_t i) {
  BitVec v(n);
  v.set(i, true);
  return v;
}

BitVec BitVec::from_string(const std::string& bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVec string must contain only 0/1: " +
                                  bits);
  }
  return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.n_ != n_)
    throw std::invalid_argument("BitVec length mismatch: " +
                                std::to_string(n_) + " vs " +
                                std::to_string(o.n_));
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

bool BitVec::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

int BitVec::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w])
      return static_cast<int>(w * 64 +
                              static_cast<std::size_t>(std::countr_zero(words_[w])));
  return -1;
}

std::vector<int> BitVec::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool parity_of_and(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("parity_of_and: length mismatch");
  bool p = false;
  for (std::size_t i = 0; i < a.size(); ++i) p ^= (a.get(i) && b.get(i));
  return p;
}

ParityMatrix ParityMatrix::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ParityMatrix size must be >= 1");
  ParityMatrix m;
  m.rows_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_.push_back(BitVec::unit(n, i));
  return m;
}

ParityMatrix ParityMatrix::zero(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ParityMatrix size must be >= 1");
  ParityMatrix m;
  m.rows_.assign(n, BitVec(n));
  return m;
}

const BitVec& ParityMatrix::row(std::size_t i) const {
  if (i >= rows_.size())
    throw std::out_of_range("ParityMatrix row index out of range");
  return rows_[i];
}

void ParityMatrix::set(std::size_t r, std::size_t c, bool v) {
  if (r >= rows_.size())
    throw std::out_of_range("ParityMatrix row index out of range");
  rows_[r].set(c, v);
}

BitVec ParityMatrix::column(std::size_t c) const {
  BitVec col(size());
  for (std::size_t r = 0; r < size(); ++r) col.set(r, rows_[r].get(c));
  return col;
}

void ParityMatrix::cnot(std::size_t control, std::size_t target) {
  if (control >= size() || target >= size())
    throw std::out_of_range("cnot index out of range for matrix of size " +
                            std::to_string(size()));
  if (control == target)
    throw std::invalid_argument("cnot control and target must differ");
  rows_[target] ^= rows_[control];
}

void ParityMatrix::add_column(std::size_t dst, std::size_t src) {
  if (dst >= size() || src >= size())
    throw std::out_of_range("add_column index out of range");
  for (auto& r : rows_)
    if (r.get(src)) r.flip(dst);
}

void ParityMatrix::xor_row(std::size_t dst, std::size_t src) {
  if (dst >= size() || src >= size())
    throw std::out_of_range("xor_row index out of range");
  rows_[dst] ^= rows_[src];
}

std::size_t ParityMatrix::rank() const {
  std::vector<BitVec> rows = rows_;
  std::size_t n = rows.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t i = r; i < n; ++i)
      if (rows[i].get(c)) {
        pivot = i;
        break;
      }
    if (pivot == n) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

std::vector<std::pair<int, int>> elimination_cnots(const ParityMatrix& m) {
  ParityMatrix a = m;
  std::size_t n = a.size();
  std::vector<std::pair<int, int>> ops;
  for (std::size_t c = 0; c < n; ++c) {
    if (!a.get(c, c)) {
      std::size_t pivot = n;
      for (std::size_t r = c + 1; r < n; ++r)
        if (a.get(r, c)) {
          pivot = r;
          break;
        }
      if (pivot == n)
        throw SingularMatrixError("matrix is singular (no pivot in column " +
                                  std::to_string(c) + ")");
      a.xor_row(c, pivot);
      ops.emplace_back(static_cast<int>(pivot), static_cast<int>(c));
    }
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && a.get(r, c)) {
        a.xor_row(r, c);
        ops.emplace_back(static_cast<int>(c), static_cast<int>(r));
      }
  }
  return ops;
}

ParityMatrix ParityMatrix::inverse() const {
  auto ops = elimination_cnots(*this);
  ParityMatrix inv = identity(size());
  for (auto [c, t] : ops) inv.cnot(static_cast<std::size_t>(c),
                                   static_cast<std::size_t>(t));
  return inv;
}

ParityMatrix ParityMatrix::transposed() const {
  ParityMatrix t = zero(size());
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitVec ParityMatrix::multiply(const BitVec& v) const {
  if (v.size() != size())
    throw std::invalid_argument("ParityMatrix::multiply dimension mismatch");
  BitVec out(size());
  for (std::size_t r = 0; r < size(); ++r)
    out.set(r, parity_of_and(rows_[r], v));
  return out;
}

BitVec ParityMatrix::multiply_transposed(const BitVec& v) const {
  if (v.size() != size())
    throw std::invalid_argument(
        "ParityMatrix::multiply_transposed dimension mismatch");
  BitVec out(size());
  for (std::size_t r = 0; r < size(); ++r)
    if (v.get(r)) out ^= rows_[r];
  return out;
}

ParityMatrix operator*(const ParityMatrix& a, const ParityMatrix& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("ParityMatrix product dimension mismatch");
  ParityMatrix out = ParityMatrix::zero(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    out.rows_[r] = b.multiply_transposed(a.rows_[r]);
  return out;
}

ParityMatrix apply_cnot(const ParityMatrix& m, std::size_t control,
                        std::size_t target) {
  ParityMatrix out = m;
  out.cnot(control, target);
  return out;
}

ParityMatrix invert(const ParityMatrix& m) { return m.inverse(); }

std::size_t rank(const ParityMatrix& m) { return m.rank(); }

bool is_permutation_matrix(const ParityMatrix& m) {
  std::size_t n = m.size();
  std::vector<int> col_hits(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (m.row(r).count() != 1) return false;
    col_hits[static_cast<std::size_t>(m.row(r).first_set())]++;
  }
  for (int h : col_hits)
    if (h != 1) return false;
  return true;
}

}  // namespace resynth

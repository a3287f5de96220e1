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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resynth {

/// Thrown when an operation that needs an invertible matrix gets a singular
/// one. Kept distinct from dimension errors (std::invalid_argument /
/// std::out_of_range).
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVec unit(std::size_t n, std::size_t i);
  /// Parses a 0/1 string; character position i is qubit i (index 0 leftmost).
  static BitVec from_string(const std::string& bits);

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    check(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    check(i);
    if (v)
      words_[i >> 6] |= kOne << (i & 63);
    else
      words_[i >> 6] &= ~(kOne << (i & 63));
  }
  void flip(std::size_t i) {
    check(i);
    words_[i >> 6] ^= kOne << (i & 63);
  }

  BitVec& operator^=(const BitVec& o);

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set bit, or -1 if none.
  int first_set() const;
  std::vector<int> support() const;
  std::string to_string() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

 private:
  static constexpr std::uint64_t kOne = 1;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;

  void check(std::size_t i) const {
    if (i >= n_)
      throw std::out_of_range("BitVec index " + std::to_string(i) +
                              " out of range for length " + std::to_string(n_));
  }
};

/// Parity of the AND of two equal-length vectors (GF(2) inner product).
bool parity_of_and(const BitVec& a, const BitVec& b);

/// Square matrix over GF(2). Row i is the parity held by qubit register i.
class ParityMatrix {
 public:
  ParityMatrix() = default;

  static ParityMatrix identity(std::size_t n);
  static ParityMatrix zero(std::size_t n);

  std::size_t size() const { return rows_.size(); }

  const BitVec& row(std::size_t i) const;
  bool get(std::size_t r, std::size_t c) const { return row(r).get(c); }
  void set(std::size_t r, std::size_t c, bool v);
  BitVec column(std::size_t c) const;

  /// CNOT as a row operation: row[target] ^= row[control].
  void cnot(std::size_t control, std::size_t target);
  /// Column operation: col[dst] ^= col[src].
  void add_column(std::size_t dst, std::size_t src);
  void xor_row(std::size_t dst, std::size_t src);  // row[dst] ^= row[src]

  std::size_t rank() const;
  bool invertible() const { return rank() == size(); }
  ParityMatrix inverse() const;  // throws SingularMatrixError
  ParityMatrix transposed() const;

  /// Matrix-vector product y = M v over GF(2).
  BitVec multiply(const BitVec& v) const;
  /// y = M^T v, i.e. the XOR of the rows selected by v's support.
  BitVec multiply_transposed(const BitVec& v) const;

  friend ParityMatrix operator*(const ParityMatrix& a, const ParityMatrix& b);
  friend bool operator==(const ParityMatrix&, const ParityMatrix&) = default;

 private:
  std::vector<BitVec> rows_;
};

ParityMatrix apply_cnot(const ParityMatrix& m, std::size_t control,
                        std::size_t target);
ParityMatrix invert(const ParityMatrix& m);
std::size_t rank(const ParityMatrix& m);

/// Gauss-Jordan decomposition of an invertible matrix into CNOT row
/// operations. Replaying the returned (control, target) pairs on m via
/// `cnot` reduces it to the identity; deterministic (first-set-bit pivots).
std::vector<std::pair<int, int>> elimination_cnots(const ParityMatrix& m);

bool is_permutation_matrix(const ParityMatrix& m);

}  // namespace resynth

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
#include <utility>
#include <vector>

#include "resynth/gates.hpp"
#include "resynth/gf2.hpp"

namespace resynth {

enum class Basis : unsigned char { Z, X };

inline char basis_char(Basis b) { return b == Basis::Z ? 'Z' : 'X'; }

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;
inline constexpr double kAngleEps = 1e-12;

/// Reduces an angle to the canonical half-open interval [0, 2*pi).
double canonical_angle(double a);
/// True if a canonical angle is 0 within kAngleEps (also catches ~2*pi).
bool angle_is_zero(double canonical);

/// One exponentiated Paulistring exp(-i*angle/2 * P) with P over {Z,I} or
/// {X,I}; `legs` marks the qubits P acts on.
struct PhaseGadget {
  Basis basis;
  BitVec legs;
  double angle;

  PhaseGadget(Basis b, BitVec l, double a);

  std::size_t weight() const { return legs.count(); }

  friend bool operator==(const PhaseGadget&, const PhaseGadget&) = default;
};

/// Ordered gadget sequence followed by a linear CNOT section.
///
/// The circuit reads: the gadgets in list order, then a CNOT network for the
/// tail. The stored tail matrix follows the push-through convention: pushing
/// CX(c,t) through the gadgets updates it as a row operation
/// row[t] ^= row[c], so the stored matrix is the inverse of the tail
/// network's linear action on basis states. A network realizing the tail is
/// therefore obtained by emitting a row-operation decomposition of the
/// stored matrix in elimination order (see elimination_cnots).
class MixedPhasePolynomial {
 public:
  explicit MixedPhasePolynomial(std::size_t n);
  MixedPhasePolynomial(std::size_t n, std::vector<PhaseGadget> gadgets,
                       ParityMatrix tail);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PhaseGadget>& gadgets() const { return gadgets_; }
  std::vector<PhaseGadget>& gadgets() { return gadgets_; }
  const ParityMatrix& tail() const { return tail_; }
  double scalar_phase() const { return scalar_phase_; }

  /// Appends a gadget; zero-leg or zero-angle gadgets are pruned (a zero-leg
  /// gadget with nonzero angle only contributes a global phase, which is
  /// accumulated in scalar_phase).
  void add_gadget(Basis b, const BitVec& legs, double angle);

  /// Replays one `CX control target` line of the text format: the stored
  /// tail is built by row operations in file order.
  void add_tail_cnot(std::size_t control, std::size_t target);

  /// Appends a physical CX after the tail network (column operation on the
  /// stored matrix).
  void append_circuit_cnot(std::size_t control, std::size_t target);

  /// Pushes a leading CX(c,t) through the whole polynomial: Z legs get
  /// legs[c] ^= legs[t], X legs get legs[t] ^= legs[c], and the tail absorbs
  /// the CNOT as a row operation. Involution.
  void push_cnot_in_place(std::size_t control, std::size_t target);

  /// Equality of n, gadget list and tail; the scalar phase is ignored
  /// (equivalence is defined up to global phase).
  friend bool operator==(const MixedPhasePolynomial& a,
                         const MixedPhasePolynomial& b) {
    return a.n_ == b.n_ && a.gadgets_ == b.gadgets_ && a.tail_ == b.tail_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<PhaseGadget> gadgets_;
  ParityMatrix tail_;
  double scalar_phase_ = 0.0;

  void check_pair(std::size_t control, std::size_t target) const;
};

MixedPhasePolynomial push_cnot(const MixedPhasePolynomial& p,
                               std::size_t control, std::size_t target);

/// Maximal consecutive run of same-basis gadgets, [begin, end).
struct Region {
  Basis basis;
  std::size_t begin;
  std::size_t end;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const Region&, const Region&) = default;
};

std::vector<Region> commuting_regions(const MixedPhasePolynomial& p);

/// Fuses equal-leg gadgets of a same-basis run (angles add mod 2*pi, zero
/// results dropped); first-occurrence order is kept.
std::vector<PhaseGadget> merge_region(const std::vector<PhaseGadget>& region);

/// Pulls every weight-1 gadget of the leading commuting region out as a
/// rotation gate, repeating as region boundaries shift.
std::pair<std::vector<Gate>, MixedPhasePolynomial> extract_leading_singles(
    const MixedPhasePolynomial& p);

/// Polynomial whose semantics is the exact inverse unitary: tail inverted,
/// gadget list reversed with negated angles, Z legs transformed by the tail
/// transpose and X legs by the tail inverse.
MixedPhasePolynomial reverse_polynomial(const MixedPhasePolynomial& p);

/// Topology-free ladder decomposition: CNOT chain onto the highest-index
/// leg, one rotation, mirrored chain. Exactly 2*(weight-1) CNOTs.
std::vector<Gate> naive_gadget_circuit(const PhaseGadget& g);

/// Relabels qubit i as perm[i] in legs and tail.
MixedPhasePolynomial relabel_qubits(const MixedPhasePolynomial& p,
                                    const std::vector<int>& perm);

/// Folds a {CX, RZ, RX} gate list into polynomial form (gadgets then tail).
MixedPhasePolynomial polynomial_of_gates(const std::vector<Gate>& gates,
                                         std::size_t n);

}  // namespace resynth

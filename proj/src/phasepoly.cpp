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

#include "resynth/phasepoly.hpp"

#include <algorithm>
#include <cmath>

namespace resynth {

double canonical_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi - kAngleEps) r = 0.0;
  return r;
}

bool angle_is_zero(double canonical) { return canonical <= kAngleEps; }

PhaseGadget::PhaseGadget(Basis b, BitVec l, double a)
    : basis(b), legs(std::move(l)), angle(canonical_angle(a)) {
  if (legs.none())
    throw std::invalid_argument(
        "PhaseGadget must act on at least one qubit (zero-leg gadgets are a "
        "global phase)");
}

MixedPhasePolynomial::MixedPhasePolynomial(std::size_t n)
    : n_(n), tail_(ParityMatrix::identity(n)) {
  if (n == 0) throw std::invalid_argument("polynomial needs at least 1 qubit");
}

MixedPhasePolynomial::MixedPhasePolynomial(std::size_t n,
                                           std::vector<PhaseGadget> gadgets,
                                           ParityMatrix tail)
    : n_(n), tail_(std::move(tail)) {
  if (n == 0) throw std::invalid_argument("polynomial needs at least 1 qubit");
  if (tail_.size() != n_)
    throw std::invalid_argument("tail dimension does not match qubit count");
  if (!tail_.invertible())
    throw SingularMatrixError("polynomial tail must be invertible");
  gadgets_.reserve(gadgets.size());
  for (auto& g : gadgets) {
    if (g.legs.size() != n_)
      throw std::invalid_argument("gadget leg length does not match n");
    add_gadget(g.basis, g.legs, g.angle);
  }
}

void MixedPhasePolynomial::add_gadget(Basis b, const BitVec& legs,
                                      double angle) {
  if (legs.size() != n_)
    throw std::invalid_argument("gadget leg length does not match n");
  double a = canonical_angle(angle);
  if (legs.none()) {
    scalar_phase_ = std::fmod(scalar_phase_ - a / 2.0, kTwoPi);
    return;
  }
  if (angle_is_zero(a)) return;
  gadgets_.emplace_back(b, legs, a);
}

void MixedPhasePolynomial::check_pair(std::size_t control,
                                      std::size_t target) const {
  if (control >= n_ || target >= n_)
    throw std::out_of_range("qubit index out of range");
  if (control == target)
    throw std::invalid_argument("control and target must differ");
}

void MixedPhasePolynomial::add_tail_cnot(std::size_t control,
                                         std::size_t target) {
  check_pair(control, target);
  tail_.cnot(control, target);
}

void MixedPhasePolynomial::append_circuit_cnot(std::size_t control,
                                               std::size_t target) {
  check_pair(control, target);
  tail_.add_column(control, target);
}

void MixedPhasePolynomial::push_cnot_in_place(std::size_t control,
                                              std::size_t target) {
  check_pair(control, target);
  bool pruned = false;
  for (auto& g : gadgets_) {
    if (g.basis == Basis::Z) {
      if (g.legs.get(target)) g.legs.flip(control);
    } else {
      if (g.legs.get(control)) g.legs.flip(target);
    }
    if (g.legs.none()) pruned = true;
  }
  if (pruned) {
    // A CNOT push cannot annihilate a gadget's legs in a valid polynomial;
    // this path guards constructed-by-hand states.
    std::vector<PhaseGadget> kept;
    kept.reserve(gadgets_.size());
    for (auto& g : gadgets_) {
      if (g.legs.none()) {
        if (!angle_is_zero(g.angle))
          scalar_phase_ = std::fmod(scalar_phase_ - g.angle / 2.0, kTwoPi);
      } else {
        kept.push_back(std::move(g));
      }
    }
    gadgets_ = std::move(kept);
  }
  tail_.cnot(control, target);
}

MixedPhasePolynomial push_cnot(const MixedPhasePolynomial& p,
                               std::size_t control, std::size_t target) {
  MixedPhasePolynomial q = p;
  q.push_cnot_in_place(control, target);
  return q;
}

std::vector<Region> commuting_regions(const MixedPhasePolynomial& p) {
  std::vector<Region> regions;
  const auto& gs = p.gadgets();
  std::size_t i = 0;
  while (i < gs.size()) {
    std::size_t j = i + 1;
    while (j < gs.size() && gs[j].basis == gs[i].basis) ++j;
    regions.push_back(Region{gs[i].basis, i, j});
    i = j;
  }
  return regions;
}

std::vector<PhaseGadget> merge_region(const std::vector<PhaseGadget>& region) {
  for (std::size_t i = 1; i < region.size(); ++i)
    if (region[i].basis != region.front().basis)
      throw std::invalid_argument("merge_region: mixed bases");
  std::vector<PhaseGadget> out;
  for (const auto& g : region) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const PhaseGadget& h) { return h.legs == g.legs; });
    if (it == out.end())
      out.push_back(g);
    else
      it->angle = canonical_angle(it->angle + g.angle);
  }
  std::erase_if(out, [](const PhaseGadget& g) { return angle_is_zero(g.angle); });
  return out;
}

std::pair<std::vector<Gate>, MixedPhasePolynomial> extract_leading_singles(
    const MixedPhasePolynomial& p) {
  MixedPhasePolynomial q = p;
  std::vector<Gate> gates;
  for (;;) {
    auto regions = commuting_regions(q);
    if (regions.empty()) break;
    const Region& first = regions.front();
    std::vector<char> remove(q.gadgets().size(), 0);
    bool found = false;
    for (std::size_t i = first.begin; i < first.end; ++i) {
      const PhaseGadget& g = q.gadgets()[i];
      if (g.weight() == 1) {
        int wire = g.legs.first_set();
        gates.push_back(g.basis == Basis::Z ? Gate::rz(wire, g.angle)
                                            : Gate::rx(wire, g.angle));
        remove[i] = 1;
        found = true;
      }
    }
    if (!found) break;
    std::vector<PhaseGadget> kept;
    kept.reserve(q.gadgets().size());
    for (std::size_t i = 0; i < q.gadgets().size(); ++i)
      if (!remove[i]) kept.push_back(q.gadgets()[i]);
    q.gadgets() = std::move(kept);
  }
  return {std::move(gates), std::move(q)};
}

MixedPhasePolynomial reverse_polynomial(const MixedPhasePolynomial& p) {
  const ParityMatrix& tail = p.tail();
  ParityMatrix tail_inv = tail.inverse();
  MixedPhasePolynomial out(p.num_qubits(), {}, tail_inv);
  const auto& gs = p.gadgets();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
    BitVec legs = it->basis == Basis::Z ? tail.multiply_transposed(it->legs)
                                        : tail_inv.multiply(it->legs);
    out.add_gadget(it->basis, legs, -it->angle);
  }
  return out;
}

std::vector<Gate> naive_gadget_circuit(const PhaseGadget& g) {
  std::vector<int> supp = g.legs.support();
  std::vector<Gate> gates;
  if (supp.empty())
    throw std::invalid_argument("naive_gadget_circuit: empty gadget");
  std::size_t k = supp.size();
  for (std::size_t i = 0; i + 1 < k; ++i)
    gates.push_back(g.basis == Basis::Z ? Gate::cx(supp[i], supp[i + 1])
                                        : Gate::cx(supp[i + 1], supp[i]));
  int top = supp.back();
  gates.push_back(g.basis == Basis::Z ? Gate::rz(top, g.angle)
                                      : Gate::rx(top, g.angle));
  for (std::size_t i = k - 1; i-- > 0;)
    gates.push_back(g.basis == Basis::Z ? Gate::cx(supp[i], supp[i + 1])
                                        : Gate::cx(supp[i + 1], supp[i]));
  return gates;
}

MixedPhasePolynomial relabel_qubits(const MixedPhasePolynomial& p,
                                    const std::vector<int>& perm) {
  std::size_t n = p.num_qubits();
  if (perm.size() != n)
    throw std::invalid_argument("relabel_qubits: permutation size mismatch");
  ParityMatrix tail = ParityMatrix::zero(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (p.tail().get(r, c))
        tail.set(static_cast<std::size_t>(perm[r]),
                 static_cast<std::size_t>(perm[c]), true);
  MixedPhasePolynomial out(n, {}, tail);
  for (const auto& g : p.gadgets()) {
    BitVec legs(n);
    for (std::size_t i = 0; i < n; ++i)
      if (g.legs.get(i)) legs.set(static_cast<std::size_t>(perm[i]), true);
    out.add_gadget(g.basis, legs, g.angle);
  }
  return out;
}

MixedPhasePolynomial polynomial_of_gates(const std::vector<Gate>& gates,
                                         std::size_t n) {
  MixedPhasePolynomial p(n);
  // Inverse of the stored tail, maintained alongside: appending a circuit
  // CNOT is a column operation on the tail and a row operation here.
  ParityMatrix tail_inv = ParityMatrix::identity(n);
  for (const auto& g : gates) {
    switch (g.op) {
      case OpType::CX:
        p.append_circuit_cnot(static_cast<std::size_t>(g.q0),
                              static_cast<std::size_t>(g.q1));
        tail_inv.cnot(static_cast<std::size_t>(g.q0),
                      static_cast<std::size_t>(g.q1));
        break;
      case OpType::RZ:
        p.add_gadget(Basis::Z, tail_inv.row(static_cast<std::size_t>(g.q0)),
                     g.angle);
        break;
      case OpType::RX:
        p.add_gadget(Basis::X, p.tail().column(static_cast<std::size_t>(g.q0)),
                     g.angle);
        break;
    }
  }
  return p;
}

}  // namespace resynth

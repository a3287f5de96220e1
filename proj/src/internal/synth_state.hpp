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

#include <cassert>
#include <utility>
#include <vector>

#include "resynth/gates.hpp"
#include "resynth/phasepoly.hpp"
#include "resynth/topology.hpp"

namespace resynth::internal {

// Emit-and-push synthesis state. The polynomial is held in the physical wire
// frame and every emitted CX is immediately pushed through it, so
//   emitted_circuit ∘ remaining_polynomial ≡ input
// holds after every call. Extracted gadgets stay in the vector but are
// marked dead; strategies must only extract weight-1 gadgets that belong to
// the leading alive region.
class SynthState {
 public:
  SynthState(MixedPhasePolynomial poly, const Topology& topo)
      : poly_(std::move(poly)),
        topo_(&topo),
        alive_(poly_.gadgets().size(), 1) {}

  const Topology& topo() const { return *topo_; }
  const MixedPhasePolynomial& poly() const { return poly_; }
  std::size_t num_gadgets() const { return poly_.gadgets().size(); }

  bool alive(std::size_t i) const { return alive_[i] != 0; }
  const PhaseGadget& gadget(std::size_t i) const { return poly_.gadgets()[i]; }
  const BitVec& legs(std::size_t i) const { return poly_.gadgets()[i].legs; }

  // Driver-side bookkeeping for region merging.
  void set_angle(std::size_t i, double a) {
    poly_.gadgets()[i].angle = canonical_angle(a);
  }
  void kill(std::size_t i) { alive_[i] = 0; }

  void emit_cx(int control, int target) {
    gates_.push_back(Gate::cx(control, target));
    poly_.push_cnot_in_place(static_cast<std::size_t>(control),
                             static_cast<std::size_t>(target));
  }

  void emit_rotation(std::size_t i, int wire) {
    const PhaseGadget& g = gadget(i);
    assert(alive(i) && g.weight() == 1 && g.legs.get(static_cast<std::size_t>(wire)));
    gates_.push_back(g.basis == Basis::Z ? Gate::rz(wire, g.angle)
                                         : Gate::rx(wire, g.angle));
    kill(i);
  }

  // Net column operation on basis-`b` legs: legs[a] ^= legs[b_qubit] for
  // every gadget of that basis (a single CX, direction chosen per basis).
  void add_into(Basis basis, int a, int b_qubit) {
    if (basis == Basis::Z)
      emit_cx(a, b_qubit);
    else
      emit_cx(b_qubit, a);
  }

  // Same net effect along a path whose interior is left untouched: a pair of
  // "V" cascades realizing an exact long-range CNOT, 4*(len-2) gates.
  void add_into_long_range(Basis basis, const std::vector<int>& path) {
    assert(path.size() >= 2);
    int r = static_cast<int>(path.size()) - 1;
    if (r == 1) {
      add_into(basis, path[0], path[1]);
      return;
    }
    for (int lo : {0, 1}) {
      for (int i = lo; i <= r - 2; ++i) add_into(basis, path[i], path[i + 1]);
      add_into(basis, path[r - 1], path[r]);
      for (int i = r - 2; i >= lo; --i) add_into(basis, path[i], path[i + 1]);
    }
  }

  const std::vector<Gate>& gates() const { return gates_; }
  std::vector<Gate> take_gates() { return std::move(gates_); }
  std::size_t gate_count() const { return gates_.size(); }

 private:
  MixedPhasePolynomial poly_;
  const Topology* topo_;
  std::vector<Gate> gates_;
  std::vector<std::uint8_t> alive_;
};

// Region synthesizers; each must leave every gadget of `region` dead.
void graysynth_region(SynthState& st, const std::vector<std::size_t>& region,
                      Basis basis);
void paritysynth_region(SynthState& st, const std::vector<std::size_t>& region,
                        Basis basis);

}  // namespace resynth::internal

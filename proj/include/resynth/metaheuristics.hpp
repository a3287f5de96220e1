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
#include <functional>
#include <string>
#include <vector>

#include "resynth/synthesis.hpp"

namespace resynth {

/// Simulated-annealing parameters. Geometric cooling
/// T_k = t_initial * (t_final/t_initial)^(k/iterations); the defaults accept
/// a +1 CNOT move with probability ~0.9 initially and ~5e-5 finally.
struct AnnealConfig {
  int iterations = 100;
  double t_initial = 10.0;
  double t_final = 0.1;
  int cnot_blocks = 5;
  std::uint64_t seed = 0;
};

/// Metropolis rule: 1 for non-worsening moves, exp(-delta/T) otherwise.
double accept_probability(double delta_cost, double temperature);

/// The annealer's move set: `cnot_blocks` layers of optional CNOTs, one per
/// (layer, oriented topology edge) slot, prepended in front of the
/// polynomial in canonical slot order. toggle() keeps a polynomial in sync
/// by unwinding the pushes of later slots, pushing the toggled gate, and
/// replaying the suffix, so toggling the same slot twice restores the
/// polynomial bit-exactly.
class CnotLayers {
 public:
  CnotLayers(const Topology& topo, int blocks);

  std::size_t num_slots() const { return slots_.size(); }
  Gate gate_at(std::size_t slot) const { return slots_[slot]; }
  bool present(std::size_t slot) const { return present_[slot] != 0; }
  std::size_t count() const;
  std::vector<Gate> gates() const;

  void toggle(std::size_t slot, MixedPhasePolynomial& poly);

 private:
  std::vector<Gate> slots_;
  std::vector<std::uint8_t> present_;
};

SynthResult anneal(const MixedPhasePolynomial& p, const Topology& t,
                   const AnnealConfig& cfg, InnerMethod inner,
                   const QubitMapping& in_map);

/// One synthesis pass; used by reverse traversal so the annealer can be
/// nested inside it.
using SynthPass = std::function<SynthResult(const MixedPhasePolynomial&,
                                            const QubitMapping&, int iteration)>;

/// Alternates synthesis of the polynomial and its reverse, threading each
/// output mapping into the next input mapping; returns the best forward
/// result. `seed` is unused by the plain inner methods (they are
/// deterministic) and is reserved for seeded passes.
SynthResult reverse_traversal(const MixedPhasePolynomial& p, const Topology& t,
                              int iterations, InnerMethod inner,
                              std::uint64_t seed);
SynthResult reverse_traversal_with(const MixedPhasePolynomial& p,
                                   const Topology& t, int iterations,
                                   const SynthPass& pass);

enum class Pipeline {
  Uncompiled,
  SG,
  Par,
  An,
  SG_RT,
  SG_RT_An,
  An_SG_RT,
  Par_RT_An,
  Par_RT_An_Nested,
};

/// Stage budgets for a named pipeline. Following the experiment protocol:
/// standalone reverse traversal or annealing runs 100 iterations; when both
/// appear they get 10 each (sequentially for *_RT_An, nested for An_*_RT).
struct PipelineSpec {
  Pipeline kind = Pipeline::SG;
  int rt_iterations = 0;
  int anneal_iterations = 0;
  int cnot_blocks = 5;

  static PipelineSpec named(Pipeline kind);
  static PipelineSpec parse(const std::string& name);
  std::string name() const;
};

std::vector<std::string> pipeline_names();

SynthResult run_pipeline(const MixedPhasePolynomial& p, const Topology& t,
                         const PipelineSpec& spec, std::uint64_t seed);

}  // namespace resynth

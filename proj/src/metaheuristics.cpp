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

#include "resynth/metaheuristics.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "resynth/rng.hpp"

namespace resynth {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_config(const AnnealConfig& cfg) {
  if (cfg.iterations < 0)
    throw std::invalid_argument("anneal iterations must be >= 0");
  if (!(cfg.t_initial >= cfg.t_final) || !(cfg.t_final > 0.0))
    throw std::invalid_argument("anneal temperatures need t_initial >= t_final > 0");
  if (cfg.cnot_blocks < 1)
    throw std::invalid_argument("anneal needs at least one CNOT block");
}

}  // namespace

double accept_probability(double delta_cost, double temperature) {
  if (!(temperature > 0.0))
    throw std::invalid_argument("temperature must be positive");
  if (delta_cost <= 0.0) return 1.0;
  return std::exp(-delta_cost / temperature);
}

CnotLayers::CnotLayers(const Topology& topo, int blocks) {
  if (blocks < 1) throw std::invalid_argument("need at least one CNOT block");
  slots_.reserve(static_cast<std::size_t>(blocks) * topo.edges().size() * 2);
  for (int b = 0; b < blocks; ++b)
    for (auto [u, v] : topo.edges()) {
      slots_.push_back(Gate::cx(u, v));
      slots_.push_back(Gate::cx(v, u));
    }
  present_.assign(slots_.size(), 0);
}

std::size_t CnotLayers::count() const {
  std::size_t c = 0;
  for (auto p : present_) c += p;
  return c;
}

std::vector<Gate> CnotLayers::gates() const {
  std::vector<Gate> out;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (present_[i]) out.push_back(slots_[i]);
  return out;
}

void CnotLayers::toggle(std::size_t slot, MixedPhasePolynomial& poly) {
  if (slot >= slots_.size()) throw std::out_of_range("CNOT slot out of range");
  std::vector<std::size_t> suffix;
  for (std::size_t i = slot + 1; i < slots_.size(); ++i)
    if (present_[i]) suffix.push_back(i);
  auto push_gate = [&](std::size_t i) {
    poly.push_cnot_in_place(static_cast<std::size_t>(slots_[i].q0),
                            static_cast<std::size_t>(slots_[i].q1));
  };
  for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) push_gate(*it);
  push_gate(slot);
  present_[slot] ^= 1;
  for (std::size_t i : suffix) push_gate(i);
}

SynthResult anneal(const MixedPhasePolynomial& p, const Topology& t,
                   const AnnealConfig& cfg, InnerMethod inner,
                   const QubitMapping& in_map) {
  check_config(cfg);
  if (p.num_qubits() != t.num_qubits())
    throw std::invalid_argument("polynomial/topology qubit count mismatch");
  auto t0 = Clock::now();

  const QubitMapping wire_identity = QubitMapping::identity(p.num_qubits());
  MixedPhasePolynomial cur = relabel_qubits(p, in_map.perm());
  CnotLayers layers(t, cfg.cnot_blocks);
  Rng rng(cfg.seed);

  auto assemble = [&](const SynthResult& inner_res) {
    SynthResult out;
    out.gates = layers.gates();
    out.gates.insert(out.gates.end(), inner_res.gates.begin(),
                     inner_res.gates.end());
    out.cnot_count = static_cast<long long>(cnot_count(out.gates));
    out.input_mapping = in_map;
    out.output_mapping = QubitMapping::compose(inner_res.output_mapping, in_map);
    return out;
  };

  SynthResult inner_res = synthesize_inner(cur, t, inner, wire_identity);
  SynthResult best = assemble(inner_res);
  long long cur_cost = best.cnot_count;

  for (int k = 0; k < cfg.iterations; ++k) {
    double temp =
        cfg.t_initial * std::pow(cfg.t_final / cfg.t_initial,
                                 static_cast<double>(k) / cfg.iterations);
    // Draw order (layer, edge, orientation) is part of the determinism
    // contract.
    std::uint64_t blocks = static_cast<std::uint64_t>(cfg.cnot_blocks);
    std::uint64_t nedges = t.edges().size();
    std::uint64_t layer = rng.below(blocks);
    std::uint64_t edge = rng.below(nedges);
    std::uint64_t orient = rng.below(2);
    std::size_t slot = static_cast<std::size_t>((layer * nedges + edge) * 2 + orient);

    layers.toggle(slot, cur);
    SynthResult cand = synthesize_inner(cur, t, inner, wire_identity);
    long long cand_cost =
        static_cast<long long>(layers.count()) + cand.cnot_count;
    long long delta = cand_cost - cur_cost;
    bool accepted = delta <= 0;
    if (!accepted)
      accepted = rng.unit() < accept_probability(static_cast<double>(delta), temp);
    if (accepted) {
      cur_cost = cand_cost;
      if (cand_cost < best.cnot_count) best = assemble(cand);
    } else {
      layers.toggle(slot, cur);  // exact undo through the push involution
    }
  }

  best.elapsed = seconds_since(t0);
  return best;
}

SynthResult reverse_traversal_with(const MixedPhasePolynomial& p,
                                   const Topology& /*t*/, int iterations,
                                   const SynthPass& pass) {
  if (iterations < 1)
    throw std::invalid_argument("reverse traversal needs >= 1 iteration");
  auto t0 = Clock::now();
  MixedPhasePolynomial reversed = reverse_polynomial(p);
  QubitMapping map = QubitMapping::identity(p.num_qubits());
  SynthResult best;
  bool have_best = false;
  for (int k = 0; k < iterations; ++k) {
    bool forward = (k % 2) == 0;
    SynthResult res = pass(forward ? p : reversed, map, k);
    map = res.output_mapping;
    if (forward && (!have_best || res.cnot_count < best.cnot_count)) {
      best = std::move(res);
      have_best = true;
    }
  }
  best.elapsed = seconds_since(t0);
  return best;
}

SynthResult reverse_traversal(const MixedPhasePolynomial& p, const Topology& t,
                              int iterations, InnerMethod inner,
                              std::uint64_t seed) {
  (void)seed;  // plain inner passes are deterministic
  return reverse_traversal_with(
      p, t, iterations,
      [&](const MixedPhasePolynomial& q, const QubitMapping& m, int) {
        return synthesize_inner(q, t, inner, m);
      });
}

PipelineSpec PipelineSpec::named(Pipeline kind) {
  PipelineSpec s;
  s.kind = kind;
  switch (kind) {
    case Pipeline::Uncompiled:
    case Pipeline::SG:
    case Pipeline::Par:
      break;
    case Pipeline::An:
      s.anneal_iterations = 100;
      break;
    case Pipeline::SG_RT:
      s.rt_iterations = 100;
      break;
    case Pipeline::SG_RT_An:
    case Pipeline::Par_RT_An:
    case Pipeline::An_SG_RT:
    case Pipeline::Par_RT_An_Nested:
      s.rt_iterations = 10;
      s.anneal_iterations = 10;
      break;
  }
  return s;
}

PipelineSpec PipelineSpec::parse(const std::string& name) {
  if (name == "uncompiled" || name == "naive")
    return named(Pipeline::Uncompiled);
  if (name == "sg") return named(Pipeline::SG);
  if (name == "par") return named(Pipeline::Par);
  if (name == "an") return named(Pipeline::An);
  if (name == "sg+rt") return named(Pipeline::SG_RT);
  if (name == "sg+rt-an") return named(Pipeline::SG_RT_An);
  if (name == "an+sg+rt") return named(Pipeline::An_SG_RT);
  if (name == "par+rt-an") return named(Pipeline::Par_RT_An);
  if (name == "par+rt+an") return named(Pipeline::Par_RT_An_Nested);
  throw std::invalid_argument("unknown pipeline: " + name);
}

std::string PipelineSpec::name() const {
  switch (kind) {
    case Pipeline::Uncompiled:
      return "uncompiled";
    case Pipeline::SG:
      return "sg";
    case Pipeline::Par:
      return "par";
    case Pipeline::An:
      return "an";
    case Pipeline::SG_RT:
      return "sg+rt";
    case Pipeline::SG_RT_An:
      return "sg+rt-an";
    case Pipeline::An_SG_RT:
      return "an+sg+rt";
    case Pipeline::Par_RT_An:
      return "par+rt-an";
    case Pipeline::Par_RT_An_Nested:
      return "par+rt+an";
  }
  return "?";
}

std::vector<std::string> pipeline_names() {
  return {"uncompiled", "sg",       "par",      "an",       "sg+rt",
          "sg+rt-an",   "an+sg+rt", "par+rt-an", "par+rt+an"};
}

namespace {

SynthResult run_rt_then_anneal(const MixedPhasePolynomial& p, const Topology& t,
                               const PipelineSpec& spec, InnerMethod inner,
                               std::uint64_t seed) {
  SynthResult rt = reverse_traversal(p, t, spec.rt_iterations, inner, seed);
  AnnealConfig cfg;
  cfg.iterations = spec.anneal_iterations;
  cfg.cnot_blocks = spec.cnot_blocks;
  cfg.seed = mix_seed(seed, 0x616e6e65616cULL);
  // Start from the mapping of the best traversal pass; the annealer's first
  // evaluation then reproduces that result, so it can only improve on it.
  return anneal(p, t, cfg, inner, rt.input_mapping);
}

SynthResult run_nested_anneal_rt(const MixedPhasePolynomial& p,
                                 const Topology& t, const PipelineSpec& spec,
                                 InnerMethod inner, std::uint64_t seed) {
  return reverse_traversal_with(
      p, t, spec.rt_iterations,
      [&](const MixedPhasePolynomial& q, const QubitMapping& m, int iteration) {
        AnnealConfig cfg;
        cfg.iterations = spec.anneal_iterations;
        cfg.cnot_blocks = spec.cnot_blocks;
        cfg.seed = mix_seed(seed, static_cast<std::uint64_t>(iteration));
        return anneal(q, t, cfg, inner, m);
      });
}

}  // namespace

SynthResult run_pipeline(const MixedPhasePolynomial& p, const Topology& t,
                         const PipelineSpec& spec, std::uint64_t seed) {
  auto t0 = Clock::now();
  SynthResult res;
  switch (spec.kind) {
    case Pipeline::Uncompiled:
      res = synthesize(p, t, Method::Naive, QubitMapping::identity(p.num_qubits()));
      break;
    case Pipeline::SG:
      res = synthesize(p, t, Method::SteinerGray,
                       QubitMapping::identity(p.num_qubits()));
      break;
    case Pipeline::Par:
      res = synthesize(p, t, Method::Parity,
                       QubitMapping::identity(p.num_qubits()));
      break;
    case Pipeline::An: {
      AnnealConfig cfg;
      cfg.iterations = spec.anneal_iterations;
      cfg.cnot_blocks = spec.cnot_blocks;
      cfg.seed = seed;
      res = anneal(p, t, cfg, InnerMethod::RoutedNaive,
                   QubitMapping::identity(p.num_qubits()));
      break;
    }
    case Pipeline::SG_RT:
      res = reverse_traversal(p, t, spec.rt_iterations, InnerMethod::SteinerGray,
                              seed);
      break;
    case Pipeline::SG_RT_An:
      res = run_rt_then_anneal(p, t, spec, InnerMethod::SteinerGray, seed);
      break;
    case Pipeline::Par_RT_An:
      res = run_rt_then_anneal(p, t, spec, InnerMethod::Parity, seed);
      break;
    case Pipeline::An_SG_RT:
      res = run_nested_anneal_rt(p, t, spec, InnerMethod::SteinerGray, seed);
      break;
    case Pipeline::Par_RT_An_Nested:
      res = run_nested_anneal_rt(p, t, spec, InnerMethod::Parity, seed);
      break;
  }
  res.elapsed = seconds_since(t0);
  return res;
}

}  // namespace resynth

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

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances and budgets are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "resynth/bench.hpp"
#include "resynth/random_circuit.hpp"
#include "resynth/rng.hpp"
#include "resynth/verify.hpp"

namespace {

using namespace resynth;
using Clock = std::chrono::steady_clock;

struct Failure {
  std::string detail;
};

int failures_total = 0;

void run_criterion(int number, const std::string& name,
                   const std::function<std::string()>& body) {
  auto t0 = Clock::now();
  std::string detail;
  bool pass = true;
  try {
    detail = body();
  } catch (const Failure& f) {
    pass = false;
    detail = f.detail;
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL",
              number, name.c_str(), secs, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures_total;
}

void require(bool cond, const std::string& detail) {
  if (!cond) throw Failure{detail};
}

const std::vector<std::string> kRoster{"sg",       "par",      "an",
                                       "sg+rt",    "sg+rt-an", "an+sg+rt",
                                       "par+rt-an"};

// ---------------------------------------------------------------------------
// 1. Connectivity compliance across every pipeline, device and size.
std::string criterion_connectivity() {
  const std::vector<std::string> devices{"line-5", "valencia", "ring-8"};
  const std::vector<int> counts{1, 10, 50};
  const int circuits = 100;
  long long checked_gates = 0;
  std::vector<std::string> errors;

  for (const auto& device : devices) {
    Topology topo = Topology::named(device);
    for (int m : counts) {
      std::vector<std::string> cell_errors(
          static_cast<std::size_t>(circuits));
      long long cell_gates = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : cell_gates)
      for (int c = 0; c < circuits; ++c) {
        std::uint64_t seed = mix_seed(
            mix_seed(hash_string(device), static_cast<std::uint64_t>(m)),
            static_cast<std::uint64_t>(c));
        MixedPhasePolynomial circuit =
            random_circuit(topo.num_qubits(), static_cast<std::size_t>(m), seed);
        for (const auto& name : kRoster) {
          PipelineSpec spec = PipelineSpec::parse(name);
          SynthResult res =
              run_pipeline(circuit, topo, spec, mix_seed(seed, hash_string(name)));
          cell_gates += res.cnot_count;
          if (!connectivity_compliant(res.gates, topo))
            cell_errors[static_cast<std::size_t>(c)] =
                device + " m=" + std::to_string(m) + " pipeline=" + name +
                " seed=" + std::to_string(seed);
        }
      }
      checked_gates += cell_gates;
      for (const auto& e : cell_errors)
        if (!e.empty()) errors.push_back(e);
    }
  }
  require(errors.empty(),
          errors.empty() ? "" : "off-edge CNOTs at " + errors.front());
  return std::to_string(checked_gates) + " CNOTs checked, all on edges";
}

// ---------------------------------------------------------------------------
// 2. Semantic soundness against the dense oracle, all pipelines.
std::string criterion_soundness() {
  const std::vector<std::string> pipelines{
      "uncompiled", "sg",       "par",       "an",       "sg+rt",
      "sg+rt-an",   "an+sg+rt", "par+rt-an", "par+rt+an"};
  const int total = 200;
  std::vector<std::string> errors(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < total; ++i) {
    static const char* kDevices[] = {"line-2", "line-3", "line-4", "valencia",
                                     "yorktown", "ring-5"};
    const std::string device = kDevices[i % 6];
    Topology topo = Topology::named(device);
    std::size_t m = 1 + static_cast<std::size_t>(i % 10);
    std::uint64_t seed = mix_seed(0xacc2, static_cast<std::uint64_t>(i));
    MixedPhasePolynomial circuit = random_circuit(topo.num_qubits(), m, seed);
    for (const auto& name : pipelines) {
      PipelineSpec spec = PipelineSpec::parse(name);
      SynthResult res =
          run_pipeline(circuit, topo, spec, mix_seed(seed, hash_string(name)));
      if (!circuit_implements(circuit, res.gates, res.input_mapping,
                              res.output_mapping, 1e-8)) {
        errors[static_cast<std::size_t>(i)] = device +
                                              " m=" + std::to_string(m) +
                                              " pipeline=" + name +
                                              " seed=" + std::to_string(seed);
        break;
      }
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Failure{"oracle mismatch at " + e};
  return "200 circuits x 9 pipelines equivalent at 1e-8";
}

// ---------------------------------------------------------------------------
// 3. push_cnot involution, bit-exact.
std::string criterion_involution() {
  Rng rng(0xacc3);
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 2 + rng.below(7);
    std::size_t m = 1 + rng.below(12);
    MixedPhasePolynomial p = random_circuit(n, m, rng.next());
    if (rng.below(2)) {
      std::size_t c = rng.below(n);
      std::size_t t = rng.below(n - 1);
      if (t >= c) ++t;
      p.add_tail_cnot(c, t);
    }
    std::size_t c = rng.below(n);
    std::size_t t = rng.below(n - 1);
    if (t >= c) ++t;
    MixedPhasePolynomial q = push_cnot(push_cnot(p, c, t), c, t);
    require(q == p, "involution broke at case " + std::to_string(i));
  }
  return "1000 double pushes restored the polynomial bit-exactly";
}

// ---------------------------------------------------------------------------
// 4. PermRowCol realization on matching topologies.
std::string criterion_permrowcol() {
  struct Case {
    std::size_t n;
    const char* device;
    int rounds;
  };
  const Case cases[] = {{5, "valencia", 67},
                        {8, "ring-8", 67},
                        {14, "melbourne", 66}};
  Rng rng(0xacc4);
  for (const auto& cs : cases) {
    Topology topo = Topology::named(cs.device);
    for (int round = 0; round < cs.rounds; ++round) {
      ParityMatrix m = ParityMatrix::identity(cs.n);
      std::size_t ops = 2 * cs.n + rng.below(4 * cs.n);
      for (std::size_t i = 0; i < ops; ++i) {
        std::size_t c = rng.below(cs.n);
        std::size_t t = rng.below(cs.n - 1);
        if (t >= c) ++t;
        m.cnot(c, t);
      }
      PermRowColResult res = permrowcol(m, topo);
      require(connectivity_compliant(res.gates, topo),
              std::string("off-edge CNOT on ") + cs.device);
      ParityMatrix replay = ParityMatrix::identity(cs.n);
      for (const auto& g : res.gates)
        replay.cnot(static_cast<std::size_t>(g.q0),
                    static_cast<std::size_t>(g.q1));
      ParityMatrix perm = ParityMatrix::zero(cs.n);
      for (std::size_t col = 0; col < cs.n; ++col)
        perm.set(static_cast<std::size_t>(res.mapping(static_cast<int>(col))),
                 col, true);
      require(replay * perm == m,
              std::string("replay mismatch on ") + cs.device);
    }
  }
  return "200 matrices realized up to the returned permutation, on edges";
}

// ---------------------------------------------------------------------------
// 5. Paritysynth beats Steiner-GraySynth at 100 gadgets on melbourne.
std::string criterion_par_vs_sg() {
  Topology topo = Topology::named("melbourne");
  double sum_par = 0.0, sum_sg = 0.0;
  for (int c = 0; c < 20; ++c) {
    std::uint64_t seed = mix_seed(0xacc5, static_cast<std::uint64_t>(c));
    MixedPhasePolynomial circuit = random_circuit(14, 100, seed);
    sum_sg += static_cast<double>(
        synthesize(circuit, topo, Method::SteinerGray, QubitMapping::identity(14))
            .cnot_count);
    sum_par += static_cast<double>(
        synthesize(circuit, topo, Method::Parity, QubitMapping::identity(14))
            .cnot_count);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "mean par %.1f vs mean sg %.1f over 20 circuits",
                sum_par / 20.0, sum_sg / 20.0);
  require(sum_par < sum_sg, buf);
  return buf;
}

// ---------------------------------------------------------------------------
// 6. Reverse traversal and annealing never worsen the chain, zero slack.
// The traversal budget is aligned at 10 iterations on both sides of the
// second comparison (the combined-stage budget), so the per-instance chain
// sg >= sg+rt >= sg+rt-an is exact.
std::string criterion_rt_anneal_chain() {
  Topology topo = Topology::named("valencia");
  double mean_sg = 0.0, mean_rt = 0.0, mean_rt_an = 0.0;
  for (int c = 0; c < 20; ++c) {
    std::uint64_t seed = mix_seed(0xacc6, static_cast<std::uint64_t>(c));
    MixedPhasePolynomial circuit = random_circuit(5, 50, seed);
    long long sg =
        synthesize(circuit, topo, Method::SteinerGray, QubitMapping::identity(5))
            .cnot_count;
    PipelineSpec rt_spec = PipelineSpec::parse("sg+rt");
    rt_spec.rt_iterations = 10;
    long long rt = run_pipeline(circuit, topo, rt_spec, seed).cnot_count;
    long long rt_an =
        run_pipeline(circuit, topo, PipelineSpec::parse("sg+rt-an"), seed)
            .cnot_count;
    require(rt <= sg, "sg+rt worsened sg on circuit " + std::to_string(c));
    require(rt_an <= rt,
            "sg+rt-an worsened sg+rt on circuit " + std::to_string(c));
    mean_sg += static_cast<double>(sg);
    mean_rt += static_cast<double>(rt);
    mean_rt_an += static_cast<double>(rt_an);
  }
  require(mean_rt <= mean_sg, "mean(sg+rt) > mean(sg)");
  require(mean_rt_an <= mean_rt, "mean(sg+rt-an) > mean(sg+rt)");
  char buf[160];
  std::snprintf(buf, sizeof buf, "means: sg %.1f >= sg+rt %.1f >= sg+rt-an %.1f",
                mean_sg / 20.0, mean_rt / 20.0, mean_rt_an / 20.0);
  return buf;
}

// ---------------------------------------------------------------------------
// 7. Naive ladder arithmetic.
std::string criterion_naive_arithmetic() {
  Rng rng(0xacc7);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + rng.below(7);
    BitVec legs(n);
    std::size_t k = 1 + rng.below(n);
    while (legs.count() < k) legs.set(rng.below(n), true);
    PhaseGadget g(rng.below(2) ? Basis::Z : Basis::X, legs,
                  static_cast<double>(1 + rng.below(7)) * kTwoPi / 8.0);
    require(cnot_count(naive_gadget_circuit(g)) == 2 * (g.weight() - 1),
            "ladder count mismatch");
  }
  PhaseGadget zzz(Basis::Z, BitVec::from_string("111"), kTwoPi / 8.0);
  require(cnot_count(naive_gadget_circuit(zzz)) == 4, "ZZZ ladder is not 4");
  return "2(k-1) per gadget; ZZZ ladder emits 4";
}

// ---------------------------------------------------------------------------
// 8. Benchmark determinism across runs and parallelism levels.
std::string criterion_determinism() {
  BenchOptions opt;
  opt.devices = {"line-4", "valencia"};
  opt.gadget_counts = {1, 5};
  opt.circuits_per_cell = 3;
  for (const auto& name : {"sg", "par", "an", "sg+rt-an"})
    opt.pipelines.push_back(PipelineSpec::parse(name));
  opt.seed = 12345;
  opt.wall_timing = false;  // seconds column pinned to zero
  opt.jobs = 1;
  std::string a = rows_to_csv(run_benchmark(opt));
  std::string b = rows_to_csv(run_benchmark(opt));
  opt.jobs = 4;
  std::string c = rows_to_csv(run_benchmark(opt));
  require(a == b, "same seed, same jobs: CSV differs");
  require(a == c, "jobs=1 vs jobs=4: CSV differs");
  require(a.rfind("device,ngadgets,circuit_id,method,cnots,seconds,seed\n", 0) ==
              0,
          "CSV header mismatch");
  return "byte-identical CSVs across reruns and jobs levels";
}

// ---------------------------------------------------------------------------
// 9. Desk-scale runtime sanity on a 20-qubit device.
std::string criterion_runtime() {
  Topology topo = Topology::named("johannesburg");
  MixedPhasePolynomial circuit = random_circuit(20, 100, 0xacc9);

  auto t0 = Clock::now();
  SynthResult par =
      synthesize(circuit, topo, Method::Parity, QubitMapping::identity(20));
  double par_secs = std::chrono::duration<double>(Clock::now() - t0).count();
  require(par_secs < 60.0, "par run took " + std::to_string(par_secs) + "s");

  t0 = Clock::now();
  SynthResult full =
      run_pipeline(circuit, topo, PipelineSpec::parse("an+sg+rt"), 0xacc9);
  double full_secs = std::chrono::duration<double>(Clock::now() - t0).count();
  require(full_secs < 1800.0,
          "an+sg+rt run took " + std::to_string(full_secs) + "s");

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "par: %.2fs (%lld CNOTs); an+sg+rt: %.1fs (%lld CNOTs)",
                par_secs, par.cnot_count, full_secs, full.cnot_count);
  return buf;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  run_criterion(1, "connectivity compliance", criterion_connectivity);
  run_criterion(2, "semantic soundness (dense oracle)", criterion_soundness);
  run_criterion(3, "conjugation involution", criterion_involution);
  run_criterion(4, "permrowcol realization", criterion_permrowcol);
  run_criterion(5, "paritysynth beats graysynth at 100 gadgets",
                criterion_par_vs_sg);
  run_criterion(6, "reverse traversal / annealing chain",
                criterion_rt_anneal_chain);
  run_criterion(7, "naive baseline arithmetic", criterion_naive_arithmetic);
  run_criterion(8, "benchmark determinism", criterion_determinism);
  run_criterion(9, "desk-scale runtime sanity", criterion_runtime);
  if (failures_total == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures_total);
  return failures_total == 0 ? 0 : 1;
}

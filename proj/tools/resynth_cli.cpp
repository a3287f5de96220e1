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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resynth/bench.hpp"
#include "resynth/circuit_io.hpp"
#include "resynth/qasm.hpp"
#include "resynth/random_circuit.hpp"
#include "resynth/verify.hpp"

namespace {

using namespace resynth;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split_list(text)) out.push_back(std::stoi(tok));
  return out;
}

QubitMapping parse_mapping(const std::string& text, std::size_t n) {
  if (text.empty()) return QubitMapping::identity(n);
  auto perm = split_ints(text);
  if (perm.size() != n)
    throw std::invalid_argument("mapping must list all " + std::to_string(n) +
                                " qubits");
  return QubitMapping::from_permutation(perm);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

int run_gen(std::size_t n, std::size_t m, std::uint64_t seed, bool continuous,
            const std::string& out_path) {
  MixedPhasePolynomial p = random_circuit(n, m, seed, !continuous);
  write_text(out_path, write_polynomial(p));
  return 0;
}

int run_synth(const std::string& in_path, const std::string& topo_name,
              const std::string& method, std::uint64_t seed, int rt_iters,
              int anneal_iters, const std::string& out_path,
              const std::string& qasm_path) {
  MixedPhasePolynomial p = read_polynomial_file(in_path);
  Topology topo = Topology::named(topo_name);
  PipelineSpec spec = PipelineSpec::parse(method);
  if (rt_iters > 0) spec.rt_iterations = rt_iters;
  if (anneal_iters > 0) spec.anneal_iterations = anneal_iters;
  SynthResult res = run_pipeline(p, topo, spec, seed);
  std::cout << "cnots " << res.cnot_count << "\n";
  std::cout << "input_mapping " << res.input_mapping.to_string() << "\n";
  std::cout << "output_mapping " << res.output_mapping.to_string() << "\n";
  if (!out_path.empty())
    write_text(out_path, write_polynomial(
                             polynomial_of_gates(res.gates, p.num_qubits())));
  if (!qasm_path.empty())
    write_text(qasm_path, export_qasm(res.gates, p.num_qubits()));
  return 0;
}

int run_bench(const std::string& devices, const std::string& gadget_counts,
              int circuits, const std::string& methods, std::uint64_t seed,
              const std::string& csv_out, int jobs, const std::string& timing,
              const std::string& verify_mode) {
  BenchOptions opt;
  opt.devices = split_list(devices);
  opt.gadget_counts = split_ints(gadget_counts);
  opt.circuits_per_cell = circuits;
  for (const auto& name : split_list(methods))
    opt.pipelines.push_back(PipelineSpec::parse(name));
  opt.seed = seed;
  opt.jobs = jobs;
  if (timing == "wall")
    opt.wall_timing = true;
  else if (timing == "none")
    opt.wall_timing = false;
  else
    throw std::invalid_argument("--timing must be wall or none");
  if (verify_mode == "auto")
    opt.verify = true;
  else if (verify_mode == "off")
    opt.verify = false;
  else
    throw std::invalid_argument("--verify must be auto or off");

  auto rows = run_benchmark(opt);
  if (!csv_out.empty()) write_text(csv_out, rows_to_csv(rows));
  std::cout << summarize(rows);
  return 0;
}

int run_verify(const std::string& a_path, const std::string& b_path,
               const std::string& in_map, const std::string& out_map,
               double tol) {
  MixedPhasePolynomial a = read_polynomial_file(a_path);
  MixedPhasePolynomial b = read_polynomial_file(b_path);
  if (a.num_qubits() != b.num_qubits()) {
    std::cout << "FAIL (qubit counts differ)\n";
    return 1;
  }
  DenseUnitary ua = unitary_of_polynomial(a);
  DenseUnitary ub = unitary_of_polynomial(b);
  bool ok = equivalent(ua, ub, parse_mapping(in_map, a.num_qubits()),
                       parse_mapping(out_map, a.num_qubits()), tol);
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Architecture-aware resynthesis of mixed ZX-phase polynomial "
               "circuits"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random circuit file");
  std::size_t gen_n = 5, gen_m = 10;
  std::uint64_t gen_seed = 0;
  bool gen_continuous = false;
  std::string gen_out;
  gen->add_option("-n,--qubits", gen_n, "Number of qubits")->required();
  gen->add_option("-m,--gadgets", gen_m, "Number of phase gadgets")->required();
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_flag("--continuous-angles", gen_continuous,
                "Uniform angles instead of multiples of pi/4");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // synth
  auto* synth = app.add_subcommand("synth", "Resynthesize a circuit file");
  std::string synth_in, synth_topo, synth_method = "sg", synth_out, synth_qasm;
  std::uint64_t synth_seed = 0;
  int synth_rt = 0, synth_anneal = 0;
  synth->add_option("input", synth_in, "Circuit file")->required();
  synth->add_option("--topology", synth_topo, "Target topology name")
      ->required();
  synth->add_option("--method", synth_method,
                    "Pipeline: uncompiled, sg, par, an, sg+rt, sg+rt-an, "
                    "an+sg+rt, par+rt-an, par+rt+an");
  synth->add_option("--seed", synth_seed, "RNG seed for annealing stages");
  synth->add_option("--rt-iters", synth_rt, "Override reverse traversal budget");
  synth->add_option("--anneal-iters", synth_anneal,
                    "Override annealer iteration budget");
  synth->add_option("-o,--output", synth_out, "Write result as a circuit file");
  synth->add_option("--qasm", synth_qasm, "Write result as OpenQASM 2.0");

  // bench
  auto* bench = app.add_subcommand("bench", "Batch benchmark over random circuits");
  std::string bench_devices = "valencia,yorktown,melbourne,johannesburg,singapore";
  std::string bench_counts = "1,10,100";
  std::string bench_methods =
      "uncompiled,sg,par,an,sg+rt,sg+rt-an,an+sg+rt,par+rt-an";
  std::string bench_csv, bench_timing = "wall", bench_verify = "auto";
  int bench_circuits = 20, bench_jobs = 1;
  std::uint64_t bench_seed = 0;
  bench->add_option("--devices", bench_devices, "Comma-separated device names");
  bench->add_option("--gadget-counts", bench_counts, "Comma-separated gadget counts");
  bench->add_option("--circuits", bench_circuits, "Circuits per (device, count) cell");
  bench->add_option("--methods", bench_methods, "Comma-separated pipeline names");
  bench->add_option("--seed", bench_seed, "Global seed");
  bench->add_option("--csv-out", bench_csv, "Write per-run rows as CSV");
  bench->add_option("--jobs", bench_jobs, "Parallel jobs");
  bench->add_option("--timing", bench_timing,
                    "wall: real seconds; none: zeros for reproducible output");
  bench->add_option("--verify", bench_verify,
                    "auto: compliance always, equivalence when n <= 5; off");

  // verify
  auto* verify = app.add_subcommand("verify", "Check two circuit files for equivalence");
  std::string verify_a, verify_b, verify_in_map, verify_out_map;
  double verify_tol = 1e-8;
  verify->add_option("a", verify_a, "First circuit file")->required();
  verify->add_option("b", verify_b, "Second circuit file")->required();
  verify->add_option("--in-map", verify_in_map,
                     "Input mapping for b (comma-separated images)");
  verify->add_option("--out-map", verify_out_map,
                     "Output mapping for b (comma-separated images)");
  verify->add_option("--tol", verify_tol, "Frobenius tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return run_gen(gen_n, gen_m, gen_seed, gen_continuous, gen_out);
    if (synth->parsed())
      return run_synth(synth_in, synth_topo, synth_method, synth_seed, synth_rt,
                       synth_anneal, synth_out, synth_qasm);
    if (bench->parsed())
      return run_bench(bench_devices, bench_counts, bench_circuits,
                       bench_methods, bench_seed, bench_csv, bench_jobs,
                       bench_timing, bench_verify);
    if (verify->parsed())
      return run_verify(verify_a, verify_b, verify_in_map, verify_out_map,
                        verify_tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

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

// Compares the serial reference unitary kernels against the OpenMP ones on
// random circuits and reports timings plus an exactness check (the two paths
// must agree bit for bit).

#include <chrono>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "resynth/random_circuit.hpp"
#include "resynth/synthesis.hpp"
#include "resynth/verify.hpp"

namespace {

using namespace resynth;
using Clock = std::chrono::steady_clock;

double time_build(const std::vector<Gate>& gates, std::size_t n, Exec exec,
                  DenseUnitary* out) {
  auto t0 = Clock::now();
  *out = unitary_of_gates(gates, n, exec);
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP unitary kernel benchmark"};
  std::size_t n = 11;
  std::size_t gadgets = 16;
  int repeats = 3;
  std::uint64_t seed = 7;
  app.add_option("-n,--qubits", n, "Qubits (dense oracle caps at 12)");
  app.add_option("-m,--gadgets", gadgets, "Gadgets in the random circuit");
  app.add_option("--repeats", repeats, "Timing repetitions");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  MixedPhasePolynomial poly = random_circuit(n, gadgets, seed);
  std::vector<Gate> gates;
  for (const auto& g : poly.gadgets()) {
    auto ladder = naive_gadget_circuit(g);
    gates.insert(gates.end(), ladder.begin(), ladder.end());
  }
  std::printf("circuit: n=%zu, %zu gates (from %zu gadgets)\n", n, gates.size(),
              gadgets);

  double serial_best = 1e100, parallel_best = 1e100;
  DenseUnitary us(1), up(1);
  for (int r = 0; r < repeats; ++r) {
    double ts = time_build(gates, n, Exec::Serial, &us);
    double tp = time_build(gates, n, Exec::Parallel, &up);
    if (ts < serial_best) serial_best = ts;
    if (tp < parallel_best) parallel_best = tp;
  }
  bool exact = us == up;

  DenseUnitary prod_s(1), prod_p(1);
  auto t0 = Clock::now();
  prod_s = multiply(us, us, Exec::Serial);
  double mul_serial = std::chrono::duration<double>(Clock::now() - t0).count();
  t0 = Clock::now();
  prod_p = multiply(up, up, Exec::Parallel);
  double mul_parallel = std::chrono::duration<double>(Clock::now() - t0).count();
  exact = exact && (prod_s == prod_p);

  std::printf("gate kernels : serial %8.3f ms | openmp %8.3f ms | speedup %.2fx\n",
              serial_best * 1e3, parallel_best * 1e3,
              serial_best / parallel_best);
  std::printf("matmul       : serial %8.3f ms | openmp %8.3f ms | speedup %.2fx\n",
              mul_serial * 1e3, mul_parallel * 1e3, mul_serial / mul_parallel);
  std::printf("serial and openmp kernels agree bit-for-bit: %s\n",
              exact ? "yes" : "NO");
  return exact ? 0 : 1;
}

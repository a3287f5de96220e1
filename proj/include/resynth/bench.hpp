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
#include <string>
#include <vector>

#include "resynth/metaheuristics.hpp"

namespace resynth {

/// One (circuit, method) measurement.
struct BenchRow {
  std::string device;
  int ngadgets = 0;
  int circuit_id = 0;
  std::string method;
  long long cnots = 0;
  double seconds = 0.0;
  std::uint64_t seed = 0;
};

struct BenchOptions {
  std::vector<std::string> devices;
  std::vector<int> gadget_counts{1, 10, 100};
  int circuits_per_cell = 20;
  std::vector<PipelineSpec> pipelines;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Check connectivity compliance always and oracle equivalence when the
  /// device is small enough (n <= 5); failures abort the run.
  bool verify = true;
  /// When false, the seconds column is reported as 0 so output is
  /// byte-reproducible.
  bool wall_timing = true;
};

/// Thrown when a synthesized circuit fails verification, tagged with the
/// offending (seed, device, gadget count, pipeline).
class BenchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs every (device, gadget count, circuit, pipeline) combination. Jobs
/// are independently seeded from (seed, device, gadget count, circuit id),
/// so the rows do not depend on the parallelism level; they come back in
/// canonical order.
std::vector<BenchRow> run_benchmark(const BenchOptions& options);

std::string rows_to_csv(const std::vector<BenchRow>& rows);

/// Mean CNOTs and seconds per (device, gadget count, method), as a
/// fixed-width text table in input order.
std::string summarize(const std::vector<BenchRow>& rows);

/// Mean CNOT count of one (device, gadget count, method) cell.
double mean_cnots(const std::vector<BenchRow>& rows, const std::string& device,
                  int ngadgets, const std::string& method);

}  // namespace resynth

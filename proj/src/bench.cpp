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

#include "resynth/bench.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "resynth/random_circuit.hpp"
#include "resynth/rng.hpp"
#include "resynth/verify.hpp"

namespace resynth {

namespace {

struct Job {
  std::size_t device_idx;
  std::size_t m_idx;
  int circuit_id;
  std::size_t pipeline_idx;
};

std::uint64_t circuit_seed(const BenchOptions& opt, const std::string& device,
                           int m, int circuit_id) {
  std::uint64_t s = mix_seed(opt.seed, hash_string(device));
  s = mix_seed(s, static_cast<std::uint64_t>(m));
  return mix_seed(s, static_cast<std::uint64_t>(circuit_id));
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchOptions& options) {
  if (options.devices.empty()) throw std::invalid_argument("no devices given");
  if (options.circuits_per_cell < 1)
    throw std::invalid_argument("need at least one circuit per cell");
  if (options.jobs < 1) throw std::invalid_argument("jobs must be >= 1");

  std::vector<Topology> topologies;
  topologies.reserve(options.devices.size());
  for (const auto& name : options.devices)
    topologies.push_back(Topology::named(name));

  std::vector<Job> jobs;
  for (std::size_t d = 0; d < options.devices.size(); ++d)
    for (std::size_t mi = 0; mi < options.gadget_counts.size(); ++mi)
      for (int c = 0; c < options.circuits_per_cell; ++c)
        for (std::size_t pi = 0; pi < options.pipelines.size(); ++pi)
          jobs.push_back(Job{d, mi, c, pi});

  std::vector<BenchRow> rows(jobs.size());
  std::vector<std::string> errors(jobs.size());

#pragma omp parallel for schedule(dynamic) num_threads(options.jobs)
  for (long long ji = 0; ji < static_cast<long long>(jobs.size()); ++ji) {
    const Job& job = jobs[static_cast<std::size_t>(ji)];
    const std::string& device = options.devices[job.device_idx];
    const Topology& topo = topologies[job.device_idx];
    int m = options.gadget_counts[job.m_idx];
    const PipelineSpec& spec = options.pipelines[job.pipeline_idx];
    std::uint64_t cseed = circuit_seed(options, device, m, job.circuit_id);
    std::uint64_t pseed = mix_seed(cseed, hash_string(spec.name()));
    try {
      MixedPhasePolynomial circuit =
          random_circuit(topo.num_qubits(), static_cast<std::size_t>(m), cseed);
      auto t0 = std::chrono::steady_clock::now();
      SynthResult res = run_pipeline(circuit, topo, spec, pseed);
      double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      if (options.verify) {
        if (spec.kind != Pipeline::Uncompiled &&
            !connectivity_compliant(res.gates, topo))
          throw BenchFailure("connectivity violation");
        if (topo.num_qubits() <= 5 &&
            !circuit_implements(circuit, res.gates, res.input_mapping,
                                res.output_mapping))
          throw BenchFailure("equivalence violation");
      }
      BenchRow row;
      row.device = device;
      row.ngadgets = m;
      row.circuit_id = job.circuit_id;
      row.method = spec.name();
      row.cnots = res.cnot_count;
      row.seconds = options.wall_timing ? secs : 0.0;
      row.seed = cseed;
      rows[static_cast<std::size_t>(ji)] = std::move(row);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(ji)] =
          std::string(e.what()) + " [seed=" + std::to_string(cseed) +
          " device=" + device + " gadgets=" + std::to_string(m) +
          " pipeline=" + spec.name() + "]";
    }
  }

  for (const auto& err : errors)
    if (!err.empty()) throw BenchFailure(err);
  return rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "device,ngadgets,circuit_id,method,cnots,seconds,seed\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
    out << r.device << ',' << r.ngadgets << ',' << r.circuit_id << ','
        << r.method << ',' << r.cnots << ',' << buf << ',' << r.seed << "\n";
  }
  return out.str();
}

std::string summarize(const std::vector<BenchRow>& rows) {
  // Cells keyed in first-appearance order.
  std::vector<std::tuple<std::string, int, std::string>> order;
  std::map<std::tuple<std::string, int, std::string>,
           std::tuple<double, double, int>>
      cells;
  for (const auto& r : rows) {
    auto key = std::make_tuple(r.device, r.ngadgets, r.method);
    auto it = cells.find(key);
    if (it == cells.end()) {
      order.push_back(key);
      cells[key] = {static_cast<double>(r.cnots), r.seconds, 1};
    } else {
      std::get<0>(it->second) += static_cast<double>(r.cnots);
      std::get<1>(it->second) += r.seconds;
      std::get<2>(it->second) += 1;
    }
  }
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-14s %9s %-11s %12s %12s\n", "device",
                "gadgets", "method", "mean_cnots", "mean_secs");
  out << buf;
  for (const auto& key : order) {
    auto [sum_cnots, sum_secs, count] = cells[key];
    std::snprintf(buf, sizeof buf, "%-14s %9d %-11s %12.2f %12.4f\n",
                  std::get<0>(key).c_str(), std::get<1>(key),
                  std::get<2>(key).c_str(), sum_cnots / count,
                  sum_secs / count);
    out << buf;
  }
  return out.str();
}

double mean_cnots(const std::vector<BenchRow>& rows, const std::string& device,
                  int ngadgets, const std::string& method) {
  double sum = 0.0;
  int count = 0;
  for (const auto& r : rows)
    if (r.device == device && r.ngadgets == ngadgets && r.method == method) {
      sum += static_cast<double>(r.cnots);
      ++count;
    }
  if (count == 0) throw std::invalid_argument("mean_cnots: empty cell");
  return sum / count;
}

}  // namespace resynth

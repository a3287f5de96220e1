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

#include <string>
#include <vector>

#include "resynth/gates.hpp"
#include "resynth/gf2.hpp"
#include "resynth/mapping.hpp"
#include "resynth/phasepoly.hpp"
#include "resynth/topology.hpp"

namespace resynth {

/// Output of one synthesis run. Every CX lies on a topology edge (except for
/// the topology-free naive method), and the circuit implements the input
/// polynomial up to global phase once conjugated by the mappings:
/// U(input) = P(output_mapping)^T * U(gates) * P(input_mapping).
struct SynthResult {
  std::vector<Gate> gates;
  QubitMapping input_mapping;
  QubitMapping output_mapping;
  long long cnot_count = 0;
  double elapsed = 0.0;  // seconds, synthesis only
};

enum class Method { Naive, SteinerGray, Parity };
/// Inner synthesizers available to the annealer; RoutedNaive is the
/// per-gadget Steiner-ladder decomposition (topology compliant).
enum class InnerMethod { RoutedNaive, SteinerGray, Parity };

Method method_from_string(const std::string& name);
std::string method_name(Method m);

/// CNOT-network synthesis that may reallocate qubits instead of emitting
/// SWAPs. Replaying the returned gates (as row operations on the identity)
/// equals m times the inverse permutation of `mapping`:
///   replay(gates) == m * P(mapping)^T.
struct PermRowColResult {
  std::vector<Gate> gates;
  QubitMapping mapping;  // column (input wire) -> register it ends on
};
PermRowColResult permrowcol(const ParityMatrix& m, const Topology& t);

/// Row-operation realization of an invertible matrix with no connectivity
/// constraint; the returned gate list, read as a circuit, has linear action
/// m^{-1} on basis states.
std::vector<Gate> gauss_network(const ParityMatrix& m);

SynthResult steiner_graysynth(const MixedPhasePolynomial& p, const Topology& t,
                              const QubitMapping& in_map);
SynthResult paritysynth(const MixedPhasePolynomial& p, const Topology& t,
                        const QubitMapping& in_map);
SynthResult synthesize(const MixedPhasePolynomial& p, const Topology& t,
                       Method method, const QubitMapping& in_map);
SynthResult synthesize_inner(const MixedPhasePolynomial& p, const Topology& t,
                             InnerMethod method, const QubitMapping& in_map);

/// True when every CX of the gate list is a topology edge.
bool connectivity_compliant(const std::vector<Gate>& gates, const Topology& t);

}  // namespace resynth

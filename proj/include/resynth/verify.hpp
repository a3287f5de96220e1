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

#include <complex>
#include <cstddef>
#include <vector>

#include "resynth/gates.hpp"
#include "resynth/mapping.hpp"
#include "resynth/phasepoly.hpp"

namespace resynth {

/// Kernel selection: Serial is the reference implementation, Parallel the
/// OpenMP one. Both orders of arithmetic per element are identical, so the
/// two paths produce bit-identical matrices.
enum class Exec { Serial, Parallel };

/// Dense 2^n x 2^n complex matrix, row-major; qubit 0 is the least
/// significant basis-index bit. Capped at n = 12.
class DenseUnitary {
 public:
  explicit DenseUnitary(std::size_t n);
  static DenseUnitary identity(std::size_t n);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return dim_; }
  std::complex<double>& at(std::size_t r, std::size_t c) {
    return a_[r * dim_ + c];
  }
  const std::complex<double>& at(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }
  std::complex<double>* data() { return a_.data(); }
  const std::complex<double>* data() const { return a_.data(); }

  friend bool operator==(const DenseUnitary&, const DenseUnitary&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::complex<double>> a_;
};

// Left-multiplication kernels: u <- M(gate) * u.
void apply_cx(DenseUnitary& u, int control, int target, Exec exec);
void apply_rz(DenseUnitary& u, int qubit, double angle, Exec exec);
void apply_rx(DenseUnitary& u, int qubit, double angle, Exec exec);
/// u <- exp(-i*angle/2 * P) * u for the Z- or X-Paulistring with the given
/// legs.
void apply_gadget_exp(DenseUnitary& u, Basis basis, const BitVec& legs,
                      double angle, Exec exec);

DenseUnitary multiply(const DenseUnitary& a, const DenseUnitary& b, Exec exec);
DenseUnitary adjoint(const DenseUnitary& a);
bool is_unitary(const DenseUnitary& u, double tol = 1e-9);

/// Product of the gate matrices in circuit order (leftmost gate applied
/// first).
DenseUnitary unitary_of_gates(const std::vector<Gate>& gates, std::size_t n,
                              Exec exec = Exec::Parallel);
/// Ordered product of the gadget exponentials followed by the tail network.
DenseUnitary unitary_of_polynomial(const MixedPhasePolynomial& p,
                                   Exec exec = Exec::Parallel);

/// True iff P(out_map)^T * b * P(in_map) equals a up to one global phase
/// within the given Frobenius tolerance; the phase is aligned on the
/// largest-magnitude entry of a^dagger * b.
bool equivalent(const DenseUnitary& a, const DenseUnitary& b,
                const QubitMapping& in_map, const QubitMapping& out_map,
                double tol = 1e-8);

/// Convenience: does a gate list (with its mappings) implement a polynomial?
bool circuit_implements(const MixedPhasePolynomial& p,
                        const std::vector<Gate>& gates,
                        const QubitMapping& in_map, const QubitMapping& out_map,
                        double tol = 1e-8);

}  // namespace resynth

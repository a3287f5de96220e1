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

#include "resynth/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace resynth {

namespace {

constexpr std::size_t kMaxQubits = 12;
// Below this dimension the per-gate fork/join costs more than the loop;
// parallel requests fall back to the serial loop (same arithmetic, so the
// two paths stay bit-identical either way).
constexpr std::size_t kParallelCutoffDim = 512;

using cd = std::complex<double>;

inline bool go_parallel(Exec exec, std::size_t dim) {
  return exec == Exec::Parallel && dim >= kParallelCutoffDim;
}

std::size_t checked_dim(std::size_t n) {
  if (n == 0) throw std::invalid_argument("unitary needs at least 1 qubit");
  if (n > kMaxQubits)
    throw std::invalid_argument("dense unitary limited to " +
                                std::to_string(kMaxQubits) + " qubits");
  return std::size_t{1} << n;
}

inline void swap_rows(cd* a, std::size_t dim, std::size_t r0, std::size_t r1) {
  cd* p = a + r0 * dim;
  cd* q = a + r1 * dim;
  for (std::size_t c = 0; c < dim; ++c) std::swap(p[c], q[c]);
}

inline void scale_row(cd* a, std::size_t dim, std::size_t r, cd f) {
  cd* p = a + r * dim;
  for (std::size_t c = 0; c < dim; ++c) p[c] *= f;
}

inline void mix_rows(cd* a, std::size_t dim, std::size_t r0, std::size_t r1,
                     cd m00, cd m01, cd m10, cd m11) {
  cd* p = a + r0 * dim;
  cd* q = a + r1 * dim;
  for (std::size_t c = 0; c < dim; ++c) {
    cd x = p[c], y = q[c];
    p[c] = m00 * x + m01 * y;
    q[c] = m10 * x + m11 * y;
  }
}

}  // namespace

DenseUnitary::DenseUnitary(std::size_t n)
    : n_(n), dim_(checked_dim(n)), a_(dim_ * dim_, cd(0.0, 0.0)) {}

DenseUnitary DenseUnitary::identity(std::size_t n) {
  DenseUnitary u(n);
  for (std::size_t i = 0; i < u.dim_; ++i) u.at(i, i) = cd(1.0, 0.0);
  return u;
}

void apply_cx(DenseUnitary& u, int control, int target, Exec exec) {
  std::size_t dim = u.dim();
  std::size_t cbit = std::size_t{1} << control;
  std::size_t tbit = std::size_t{1} << target;
  cd* a = u.data();
  if (go_parallel(exec, dim)) {
#pragma omp parallel for schedule(static)
    for (long long x = 0; x < static_cast<long long>(dim); ++x) {
      auto ux = static_cast<std::size_t>(x);
      if ((ux & cbit) && !(ux & tbit)) swap_rows(a, dim, ux, ux | tbit);
    }
  } else {
    for (std::size_t x = 0; x < dim; ++x)
      if ((x & cbit) && !(x & tbit)) swap_rows(a, dim, x, x | tbit);
  }
}

void apply_rz(DenseUnitary& u, int qubit, double angle, Exec exec) {
  std::size_t dim = u.dim();
  std::size_t qbit = std::size_t{1} << qubit;
  cd p0 = std::exp(cd(0.0, -angle / 2.0));
  cd p1 = std::exp(cd(0.0, angle / 2.0));
  cd* a = u.data();
  if (go_parallel(exec, dim)) {
#pragma omp parallel for schedule(static)
    for (long long x = 0; x < static_cast<long long>(dim); ++x) {
      auto ux = static_cast<std::size_t>(x);
      scale_row(a, dim, ux, (ux & qbit) ? p1 : p0);
    }
  } else {
    for (std::size_t x = 0; x < dim; ++x)
      scale_row(a, dim, x, (x & qbit) ? p1 : p0);
  }
}

void apply_rx(DenseUnitary& u, int qubit, double angle, Exec exec) {
  std::size_t dim = u.dim();
  std::size_t qbit = std::size_t{1} << qubit;
  cd c = std::cos(angle / 2.0);
  cd s = cd(0.0, -1.0) * std::sin(angle / 2.0);
  cd* a = u.data();
  if (go_parallel(exec, dim)) {
#pragma omp parallel for schedule(static)
    for (long long x = 0; x < static_cast<long long>(dim); ++x) {
      auto ux = static_cast<std::size_t>(x);
      if (!(ux & qbit)) mix_rows(a, dim, ux, ux | qbit, c, s, s, c);
    }
  } else {
    for (std::size_t x = 0; x < dim; ++x)
      if (!(x & qbit)) mix_rows(a, dim, x, x | qbit, c, s, s, c);
  }
}

void apply_gadget_exp(DenseUnitary& u, Basis basis, const BitVec& legs,
                      double angle, Exec exec) {
  if (legs.size() != u.num_qubits())
    throw std::invalid_argument("gadget legs do not match unitary size");
  std::size_t dim = u.dim();
  std::size_t mask = 0;
  for (std::size_t i = 0; i < legs.size(); ++i)
    if (legs.get(i)) mask |= std::size_t{1} << i;
  cd* a = u.data();
  if (basis == Basis::Z) {
    cd p0 = std::exp(cd(0.0, -angle / 2.0));
    cd p1 = std::exp(cd(0.0, angle / 2.0));
    if (go_parallel(exec, dim)) {
#pragma omp parallel for schedule(static)
      for (long long x = 0; x < static_cast<long long>(dim); ++x) {
        auto ux = static_cast<std::size_t>(x);
        scale_row(a, dim, ux, (std::popcount(ux & mask) & 1) ? p1 : p0);
      }
    } else {
      for (std::size_t x = 0; x < dim; ++x)
        scale_row(a, dim, x, (std::popcount(x & mask) & 1) ? p1 : p0);
    }
  } else {
    cd c = std::cos(angle / 2.0);
    cd s = cd(0.0, -1.0) * std::sin(angle / 2.0);
    if (go_parallel(exec, dim)) {
#pragma omp parallel for schedule(static)
      for (long long x = 0; x < static_cast<long long>(dim); ++x) {
        auto ux = static_cast<std::size_t>(x);
        if (ux < (ux ^ mask)) mix_rows(a, dim, ux, ux ^ mask, c, s, s, c);
      }
    } else {
      for (std::size_t x = 0; x < dim; ++x)
        if (x < (x ^ mask)) mix_rows(a, dim, x, x ^ mask, c, s, s, c);
    }
  }
}

DenseUnitary multiply(const DenseUnitary& a, const DenseUnitary& b, Exec exec) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("unitary product dimension mismatch");
  std::size_t dim = a.dim();
  DenseUnitary out(a.num_qubits());
  if (go_parallel(exec, dim)) {
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(dim); ++r)
      for (std::size_t k = 0; k < dim; ++k) {
        cd f = a.at(static_cast<std::size_t>(r), k);
        if (f == cd(0.0, 0.0)) continue;
        for (std::size_t c = 0; c < dim; ++c)
          out.at(static_cast<std::size_t>(r), c) += f * b.at(k, c);
      }
  } else {
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t k = 0; k < dim; ++k) {
        cd f = a.at(r, k);
        if (f == cd(0.0, 0.0)) continue;
        for (std::size_t c = 0; c < dim; ++c) out.at(r, c) += f * b.at(k, c);
      }
  }
  return out;
}

DenseUnitary adjoint(const DenseUnitary& a) {
  DenseUnitary out(a.num_qubits());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      out.at(c, r) = std::conj(a.at(r, c));
  return out;
}

bool is_unitary(const DenseUnitary& u, double tol) {
  DenseUnitary p = multiply(adjoint(u), u, Exec::Serial);
  double sum = 0.0;
  for (std::size_t r = 0; r < p.dim(); ++r)
    for (std::size_t c = 0; c < p.dim(); ++c) {
      cd expect = r == c ? cd(1.0, 0.0) : cd(0.0, 0.0);
      sum += std::norm(p.at(r, c) - expect);
    }
  return std::sqrt(sum) <= tol;
}

DenseUnitary unitary_of_gates(const std::vector<Gate>& gates, std::size_t n,
                              Exec exec) {
  DenseUnitary u = DenseUnitary::identity(n);
  for (const auto& g : gates) {
    switch (g.op) {
      case OpType::CX:
        apply_cx(u, g.q0, g.q1, exec);
        break;
      case OpType::RZ:
        apply_rz(u, g.q0, g.angle, exec);
        break;
      case OpType::RX:
        apply_rx(u, g.q0, g.angle, exec);
        break;
    }
  }
  return u;
}

DenseUnitary unitary_of_polynomial(const MixedPhasePolynomial& p, Exec exec) {
  DenseUnitary u = DenseUnitary::identity(p.num_qubits());
  for (const auto& g : p.gadgets())
    apply_gadget_exp(u, g.basis, g.legs, g.angle, exec);
  // The stored tail's row-op decomposition, read as a circuit, realizes the
  // tail section.
  for (auto [c, t] : elimination_cnots(p.tail())) apply_cx(u, c, t, exec);
  if (p.scalar_phase() != 0.0) {
    cd f = std::exp(cd(0.0, p.scalar_phase()));
    for (std::size_t r = 0; r < u.dim(); ++r)
      for (std::size_t col = 0; col < u.dim(); ++col) u.at(r, col) *= f;
  }
  return u;
}

namespace {

std::size_t permute_index(std::size_t x, const QubitMapping& map) {
  std::size_t y = 0;
  for (std::size_t l = 0; l < map.size(); ++l)
    if (x & (std::size_t{1} << l))
      y |= std::size_t{1} << static_cast<std::size_t>(map(static_cast<int>(l)));
  return y;
}

}  // namespace

bool equivalent(const DenseUnitary& a, const DenseUnitary& b,
                const QubitMapping& in_map, const QubitMapping& out_map,
                double tol) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("equivalent: dimension mismatch");
  if (in_map.size() != a.num_qubits() || out_map.size() != a.num_qubits())
    throw std::invalid_argument("equivalent: mapping size mismatch");
  std::size_t dim = a.dim();

  // mapped = P(out)^T * b * P(in).
  DenseUnitary mapped(a.num_qubits());
  for (std::size_t r = 0; r < dim; ++r) {
    std::size_t pr = permute_index(r, out_map);
    for (std::size_t c = 0; c < dim; ++c)
      mapped.at(r, c) = b.at(pr, permute_index(c, in_map));
  }

  DenseUnitary d = multiply(adjoint(a), mapped, Exec::Parallel);
  std::size_t best_r = 0, best_c = 0;
  double best_mag = -1.0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      double m = std::abs(d.at(r, c));
      if (m > best_mag) {
        best_mag = m;
        best_r = r;
        best_c = c;
      }
    }
  if (best_mag <= 0.0) return false;
  cd v = d.at(best_r, best_c);
  cd phase = std::conj(v / std::abs(v));  // a ~ phase * mapped

  double sum = 0.0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      sum += std::norm(a.at(r, c) - phase * mapped.at(r, c));
  return std::sqrt(sum) <= tol;
}

bool circuit_implements(const MixedPhasePolynomial& p,
                        const std::vector<Gate>& gates,
                        const QubitMapping& in_map, const QubitMapping& out_map,
                        double tol) {
  DenseUnitary a = unitary_of_polynomial(p);
  DenseUnitary b = unitary_of_gates(gates, p.num_qubits());
  return equivalent(a, b, in_map, out_map, tol);
}

}  // namespace resynth

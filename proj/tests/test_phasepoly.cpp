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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "resynth/verify.hpp"
#include "testutil.hpp"

using namespace resynth;
using testutil::random_polynomial;

namespace {

MixedPhasePolynomial figure_example() {
  // Z gadget on all three qubits followed by an X gadget on the last two.
  MixedPhasePolynomial p(3);
  p.add_gadget(Basis::Z, BitVec::from_string("111"), kTwoPi / 8.0);
  p.add_gadget(Basis::X, BitVec::from_string("011"), 2.0 * kTwoPi / 8.0);
  return p;
}

}  // namespace

TEST_CASE("push through updates Z and X legs by the XOR rules") {
  MixedPhasePolynomial p = figure_example();
  p.push_cnot_in_place(0, 1);
  CHECK(p.gadgets()[0].legs.to_string() == "011");  // Z: control ^= target
  CHECK(p.gadgets()[1].legs.to_string() == "011");  // X unchanged here

  p.push_cnot_in_place(1, 2);
  CHECK(p.gadgets()[0].legs.to_string() == "001");
  CHECK(p.gadgets()[1].legs.to_string() == "010");
}

TEST_CASE("push is an involution, bit exactly") {
  Rng rng(3);
  for (int round = 0; round < 50; ++round) {
    MixedPhasePolynomial p = random_polynomial(rng, 6, 8, true);
    std::size_t c = rng.below(6);
    std::size_t t = rng.below(5);
    if (t >= c) ++t;
    MixedPhasePolynomial q = push_cnot(push_cnot(p, c, t), c, t);
    CHECK(q == p);
  }
}

TEST_CASE("push preserves the unitary with the CNOT prepended") {
  Rng rng(5);
  for (int round = 0; round < 10; ++round) {
    MixedPhasePolynomial p = random_polynomial(rng, 4, 5, true);
    std::size_t c = rng.below(4);
    std::size_t t = rng.below(3);
    if (t >= c) ++t;
    MixedPhasePolynomial q = push_cnot(p, c, t);
    DenseUnitary up = unitary_of_polynomial(p);
    // circuit [CX, q] applies the CX first: U = U(q) * M(CX)
    DenseUnitary cx = DenseUnitary::identity(4);
    apply_cx(cx, static_cast<int>(c), static_cast<int>(t), Exec::Serial);
    DenseUnitary composed = multiply(unitary_of_polynomial(q), cx, Exec::Serial);
    QubitMapping id(4);
    CHECK(equivalent(up, composed, id, id, 1e-9));
  }
}

TEST_CASE("commuting regions") {
  MixedPhasePolynomial p(3);
  p.add_gadget(Basis::Z, BitVec::from_string("110"), 0.3);
  p.add_gadget(Basis::Z, BitVec::from_string("011"), 0.4);
  p.add_gadget(Basis::X, BitVec::from_string("111"), 0.5);
  p.add_gadget(Basis::Z, BitVec::from_string("101"), 0.6);
  auto regions = commuting_regions(p);
  REQUIRE(regions.size() == 3);
  CHECK(regions[0] == Region{Basis::Z, 0, 2});
  CHECK(regions[1] == Region{Basis::X, 2, 3});
  CHECK(regions[2] == Region{Basis::Z, 3, 4});

  MixedPhasePolynomial empty(3);
  CHECK(commuting_regions(empty).empty());

  auto fig = commuting_regions(figure_example());
  REQUIRE(fig.size() == 2);
  CHECK(fig[0].size() == 1);
  CHECK(fig[1].size() == 1);
}

TEST_CASE("merge_region fuses equal legs") {
  std::vector<PhaseGadget> region{
      PhaseGadget(Basis::Z, BitVec::from_string("110"), kTwoPi / 8.0),
      PhaseGadget(Basis::Z, BitVec::from_string("110"), kTwoPi / 8.0)};
  auto merged = merge_region(region);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].angle == doctest::Approx(kTwoPi / 4.0));

  std::vector<PhaseGadget> cancel{
      PhaseGadget(Basis::Z, BitVec::from_string("101"), kTwoPi / 2.0),
      PhaseGadget(Basis::Z, BitVec::from_string("101"), kTwoPi / 2.0)};
  CHECK(merge_region(cancel).empty());

  std::vector<PhaseGadget> mixed{
      PhaseGadget(Basis::Z, BitVec::from_string("101"), 0.1),
      PhaseGadget(Basis::X, BitVec::from_string("101"), 0.1)};
  CHECK_THROWS_AS(merge_region(mixed), std::invalid_argument);
}

TEST_CASE("merge_region preserves the angle multiset per legs") {
  Rng rng(17);
  for (int round = 0; round < 20; ++round) {
    std::vector<PhaseGadget> region;
    std::map<std::string, double> expect;
    for (int i = 0; i < 12; ++i) {
      BitVec legs = testutil::random_bits(rng, 4, true);
      double angle = static_cast<double>(1 + rng.below(7)) * (kTwoPi / 8.0);
      region.emplace_back(Basis::Z, legs, angle);
      expect[legs.to_string()] =
          canonical_angle(expect[legs.to_string()] + angle);
    }
    auto merged = merge_region(region);
    CHECK(merged.size() <= region.size());
    std::map<std::string, double> got;
    for (const auto& g : merged) got[g.legs.to_string()] = g.angle;
    for (const auto& [legs, angle] : expect) {
      if (angle_is_zero(angle))
        CHECK(got.find(legs) == got.end());
      else
        CHECK(got[legs] == doctest::Approx(angle).epsilon(1e-12));
    }
  }
}

TEST_CASE("merge preserves the region unitary") {
  Rng rng(19);
  for (int round = 0; round < 10; ++round) {
    std::vector<PhaseGadget> region;
    for (int i = 0; i < 6; ++i)
      region.emplace_back(Basis::Z, testutil::random_bits(rng, 3, true),
                          static_cast<double>(1 + rng.below(7)) * kTwoPi / 8.0);
    MixedPhasePolynomial before(3, region, ParityMatrix::identity(3));
    MixedPhasePolynomial after(3, merge_region(region),
                               ParityMatrix::identity(3));
    QubitMapping id(3);
    CHECK(equivalent(unitary_of_polynomial(before),
                     unitary_of_polynomial(after), id, id, 1e-9));
  }
}

TEST_CASE("extract_leading_singles") {
  MixedPhasePolynomial p(3);
  p.add_gadget(Basis::Z, BitVec::from_string("001"), 0.25);
  p.add_gadget(Basis::X, BitVec::from_string("010"), 0.5);
  auto [gates, rest] = extract_leading_singles(p);
  REQUIRE(gates.size() == 2);
  CHECK(gates[0] == Gate::rz(2, 0.25));
  CHECK(gates[1] == Gate::rx(1, 0.5));
  CHECK(rest.gadgets().empty());

  MixedPhasePolynomial none(3);
  none.add_gadget(Basis::Z, BitVec::from_string("011"), 0.25);
  auto [gates2, rest2] = extract_leading_singles(none);
  CHECK(gates2.empty());
  CHECK(rest2 == none);
}

TEST_CASE("reverse_polynomial") {
  MixedPhasePolynomial empty(4);
  CHECK(reverse_polynomial(empty) == empty);

  MixedPhasePolynomial single(3);
  single.add_gadget(Basis::Z, BitVec::from_string("110"), 0.7);
  MixedPhasePolynomial rev = reverse_polynomial(single);
  REQUIRE(rev.gadgets().size() == 1);
  CHECK(rev.gadgets()[0].legs.to_string() == "110");
  CHECK(rev.gadgets()[0].angle == doctest::Approx(kTwoPi - 0.7));
  CHECK(rev.tail() == ParityMatrix::identity(3));

  Rng rng(29);
  QubitMapping id(4);
  for (int round = 0; round < 10; ++round) {
    MixedPhasePolynomial p = random_polynomial(rng, 4, 6, true);
    MixedPhasePolynomial r = reverse_polynomial(p);
    CHECK(reverse_polynomial(r) == p);
    // exact inverse semantics: U(r) * U(p) == I
    DenseUnitary prod = multiply(unitary_of_polynomial(r),
                                 unitary_of_polynomial(p), Exec::Serial);
    CHECK(equivalent(DenseUnitary::identity(4), prod, id, id, 1e-9));
  }
}

TEST_CASE("naive ladder") {
  PhaseGadget zzz(Basis::Z, BitVec::from_string("111"), 0.5);
  auto gates = naive_gadget_circuit(zzz);
  REQUIRE(gates.size() == 5);
  CHECK(gates[0] == Gate::cx(0, 1));
  CHECK(gates[1] == Gate::cx(1, 2));
  CHECK(gates[2] == Gate::rz(2, 0.5));
  CHECK(gates[3] == Gate::cx(1, 2));
  CHECK(gates[4] == Gate::cx(0, 1));
  CHECK(cnot_count(gates) == 4);

  PhaseGadget unit(Basis::X, BitVec::from_string("0100"), 0.5);
  CHECK(cnot_count(naive_gadget_circuit(unit)) == 0);

  Rng rng(31);
  for (int round = 0; round < 20; ++round) {
    std::size_t n = 2 + rng.below(5);
    PhaseGadget g(rng.below(2) ? Basis::Z : Basis::X,
                  testutil::random_bits(rng, n, true),
                  static_cast<double>(1 + rng.below(7)) * kTwoPi / 8.0);
    CHECK(cnot_count(naive_gadget_circuit(g)) == 2 * (g.weight() - 1));
  }
}

TEST_CASE("naive ladder implements the gadget exponential") {
  Rng rng(41);
  QubitMapping id(4);
  for (int round = 0; round < 20; ++round) {
    PhaseGadget g(rng.below(2) ? Basis::Z : Basis::X,
                  testutil::random_bits(rng, 4, true),
                  static_cast<double>(1 + rng.below(7)) * kTwoPi / 8.0);
    MixedPhasePolynomial p(4);
    p.add_gadget(g.basis, g.legs, g.angle);
    DenseUnitary want = unitary_of_polynomial(p);
    DenseUnitary got = unitary_of_gates(naive_gadget_circuit(g), 4);
    CHECK(equivalent(want, got, id, id, 1e-9));
  }
}

TEST_CASE("zero-leg gadgets are pruned into the scalar phase") {
  MixedPhasePolynomial p(3);
  p.add_gadget(Basis::Z, BitVec(3), 0.5);
  CHECK(p.gadgets().empty());
  CHECK(p.scalar_phase() == doctest::Approx(-0.25));
  CHECK_THROWS_AS(PhaseGadget(Basis::Z, BitVec(3), 0.5), std::invalid_argument);
}

TEST_CASE("angles are canonicalized and zero angles pruned") {
  MixedPhasePolynomial p(2);
  p.add_gadget(Basis::Z, BitVec::from_string("11"), -kTwoPi / 8.0);
  REQUIRE(p.gadgets().size() == 1);
  CHECK(p.gadgets()[0].angle == doctest::Approx(7.0 * kTwoPi / 8.0));
  p.add_gadget(Basis::Z, BitVec::from_string("11"), kTwoPi);
  CHECK(p.gadgets().size() == 1);
  p.add_gadget(Basis::Z, BitVec::from_string("11"), 1e-14);
  CHECK(p.gadgets().size() == 1);
}

TEST_CASE("polynomial_of_gates round trips circuits") {
  Rng rng(43);
  QubitMapping id(4);
  for (int round = 0; round < 15; ++round) {
    // random gate list
    std::vector<Gate> gates;
    for (int i = 0; i < 12; ++i) {
      int kind = static_cast<int>(rng.below(3));
      int a = static_cast<int>(rng.below(4));
      int b = static_cast<int>(rng.below(3));
      if (b >= a) ++b;
      double angle = static_cast<double>(1 + rng.below(7)) * kTwoPi / 8.0;
      if (kind == 0)
        gates.push_back(Gate::cx(a, b));
      else if (kind == 1)
        gates.push_back(Gate::rz(a, angle));
      else
        gates.push_back(Gate::rx(a, angle));
    }
    MixedPhasePolynomial p = polynomial_of_gates(gates, 4);
    CHECK(equivalent(unitary_of_gates(gates, 4), unitary_of_polynomial(p), id,
                     id, 1e-9));
  }
}

TEST_CASE("relabel_qubits conjugates by the permutation") {
  Rng rng(47);
  std::vector<int> perm{2, 0, 3, 1};
  MixedPhasePolynomial p = random_polynomial(rng, 4, 5, true);
  MixedPhasePolynomial q = relabel_qubits(p, perm);
  // relabeling twice by the inverse restores the original
  std::vector<int> inv(4);
  for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  CHECK(relabel_qubits(q, inv) == p);
}

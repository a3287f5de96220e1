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

#include "resynth/circuit_io.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace resynth {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_polynomial(std::ostream& out, const MixedPhasePolynomial& p) {
  out << "qubits " << p.num_qubits() << "\n";
  for (const auto& g : p.gadgets())
    out << basis_char(g.basis) << ' ' << g.legs.to_string() << ' '
        << format_double(g.angle) << "\n";
  // Row-op decomposition written in replay order reproduces the tail.
  auto ops = elimination_cnots(p.tail());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    out << "CX " << it->first << ' ' << it->second << "\n";
}

std::string write_polynomial(const MixedPhasePolynomial& p) {
  std::ostringstream ss;
  write_polynomial(ss, p);
  return ss.str();
}

MixedPhasePolynomial read_polynomial(std::istream& in) {
  std::optional<MixedPhasePolynomial> poly;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (tok == "qubits") {
      long n = 0;
      if (!(ss >> n) || n <= 0) throw fail("bad qubit count");
      if (poly) throw fail("duplicate qubits line");
      poly.emplace(static_cast<std::size_t>(n));
    } else if (tok == "Z" || tok == "X") {
      if (!poly) throw fail("gadget line before qubits line");
      std::string bits;
      std::string angle_tok;
      if (!(ss >> bits >> angle_tok)) throw fail("gadget line needs legs and angle");
      BitVec legs(0);
      try {
        legs = BitVec::from_string(bits);
      } catch (const std::exception& e) {
        throw fail(e.what());
      }
      if (legs.size() != poly->num_qubits())
        throw fail("legs length does not match qubit count");
      char* end = nullptr;
      double angle = std::strtod(angle_tok.c_str(), &end);
      if (!end || *end != '\0') throw fail("bad angle: " + angle_tok);
      if (legs.none()) throw fail("gadget must have at least one leg");
      poly->add_gadget(tok == "Z" ? Basis::Z : Basis::X, legs, angle);
    } else if (tok == "CX") {
      if (!poly) throw fail("CX line before qubits line");
      long c = -1, t = -1;
      if (!(ss >> c >> t)) throw fail("CX line needs control and target");
      if (c < 0 || t < 0 || c >= static_cast<long>(poly->num_qubits()) ||
          t >= static_cast<long>(poly->num_qubits()) || c == t)
        throw fail("bad CX indices");
      poly->add_tail_cnot(static_cast<std::size_t>(c),
                          static_cast<std::size_t>(t));
    } else {
      throw fail("unknown directive: " + tok);
    }
    std::string extra;
    if (ss >> extra) throw fail("trailing tokens: " + extra);
  }
  if (!poly) throw ParseError("missing qubits line");
  return *std::move(poly);
}

MixedPhasePolynomial read_polynomial_string(const std::string& text) {
  std::istringstream ss(text);
  return read_polynomial(ss);
}

MixedPhasePolynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file: " + path);
  return read_polynomial(in);
}

void write_polynomial_file(const std::string& path,
                           const MixedPhasePolynomial& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write circuit file: " + path);
  write_polynomial(out, p);
}

}  // namespace resynth

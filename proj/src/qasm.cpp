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

#include "resynth/qasm.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "resynth/circuit_io.hpp"

namespace resynth {

std::string export_qasm(const std::vector<Gate>& gates, std::size_t n) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << n << "];\n";
  for (const auto& g : gates) {
    switch (g.op) {
      case OpType::CX:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case OpType::RZ:
        out << "rz(" << format_double(g.angle) << ") q[" << g.q0 << "];\n";
        break;
      case OpType::RX:
        out << "rx(" << format_double(g.angle) << ") q[" << g.q0 << "];\n";
        break;
    }
  }
  return out.str();
}

namespace {

int parse_qubit_ref(const std::string& tok, std::size_t n, std::size_t lineno) {
  auto open = tok.find("q[");
  auto close = tok.find(']', open);
  if (open == std::string::npos || close == std::string::npos)
    throw ParseError("line " + std::to_string(lineno) +
                     ": expected qubit reference, got " + tok);
  long q = std::strtol(tok.substr(open + 2, close - open - 2).c_str(), nullptr, 10);
  if (q < 0 || q >= static_cast<long>(n))
    throw ParseError("line " + std::to_string(lineno) + ": qubit out of range");
  return static_cast<int>(q);
}

}  // namespace

std::pair<std::vector<Gate>, std::size_t> import_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  std::vector<Gate> gates;
  while (std::getline(in, line)) {
    ++lineno;
    auto comment = line.find("//");
    if (comment != std::string::npos) line.erase(comment);
    // Strip trailing semicolon and whitespace for token scanning.
    std::string cleaned;
    for (char c : line)
      cleaned += (c == ';' || c == ',') ? ' ' : c;
    std::istringstream ss(cleaned);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (tok == "OPENQASM" || tok == "include") continue;
    if (tok == "qreg") {
      std::string reg;
      if (!(ss >> reg)) throw ParseError("line " + std::to_string(lineno) + ": bad qreg");
      auto open = reg.find('[');
      auto close = reg.find(']');
      if (open == std::string::npos || close == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": bad qreg");
      long size = std::strtol(reg.substr(open + 1, close - open - 1).c_str(),
                              nullptr, 10);
      if (size <= 0)
        throw ParseError("line " + std::to_string(lineno) + ": bad qreg size");
      n = static_cast<std::size_t>(size);
    } else if (tok == "cx") {
      std::string a, b;
      if (!(ss >> a >> b))
        throw ParseError("line " + std::to_string(lineno) + ": cx needs two qubits");
      gates.push_back(
          Gate::cx(parse_qubit_ref(a, n, lineno), parse_qubit_ref(b, n, lineno)));
    } else if (tok.rfind("rz(", 0) == 0 || tok.rfind("rx(", 0) == 0) {
      auto close = tok.find(')');
      if (close == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": bad rotation");
      double angle = std::strtod(tok.substr(3, close - 3).c_str(), nullptr);
      std::string target;
      if (!(ss >> target))
        throw ParseError("line " + std::to_string(lineno) + ": rotation needs a qubit");
      int q = parse_qubit_ref(target, n, lineno);
      gates.push_back(tok[1] == 'z' ? Gate::rz(q, angle) : Gate::rx(q, angle));
    } else {
      throw ParseError("line " + std::to_string(lineno) +
                       ": unsupported QASM statement: " + tok);
    }
  }
  if (n == 0) throw ParseError("missing qreg declaration");
  return {std::move(gates), n};
}

}  // namespace resynth

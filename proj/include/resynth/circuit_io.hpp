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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "resynth/phasepoly.hpp"

namespace resynth {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical circuit text format, one construct per line, '#' comments:
///   qubits <n>
///   <Z|X> <legs as 0/1 string, index 0 leftmost> <angle radians>
///   CX <control> <target>        (replayed in order to form the tail)
std::string write_polynomial(const MixedPhasePolynomial& p);
void write_polynomial(std::ostream& out, const MixedPhasePolynomial& p);
MixedPhasePolynomial read_polynomial(std::istream& in);
MixedPhasePolynomial read_polynomial_string(const std::string& text);
MixedPhasePolynomial read_polynomial_file(const std::string& path);
void write_polynomial_file(const std::string& path,
                           const MixedPhasePolynomial& p);

/// Shortest-round-trip decimal rendering used by all writers.
std::string format_double(double v);

}  // namespace resynth

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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "resynth/gates.hpp"

namespace resynth {

/// OpenQASM 2.0 text using one qreg and only cx/rz/rx.
std::string export_qasm(const std::vector<Gate>& gates, std::size_t n);
/// Parses the subset written by export_qasm.
std::pair<std::vector<Gate>, std::size_t> import_qasm(const std::string& text);

}  // namespace resynth

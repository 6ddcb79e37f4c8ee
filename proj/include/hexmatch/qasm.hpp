// Copyright 2026 The hexmatch authors
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

#ifndef HEXMATCH_QASM_HPP
#define HEXMATCH_QASM_HPP

#include <string>

#include "hexmatch/circuit.hpp"

namespace hexmatch {

/// Emits OpenQASM 2.0. Noise instructions are simulator-only and rejected.
std::string export_openqasm(const CircuitProgram &program);

/// Parses the subset emitted by export_openqasm (reset/h/s/sdg/cx/measure).
/// meas_map is left empty; used for round-trip checks.
CircuitProgram parse_openqasm(const std::string &text);

}  // namespace hexmatch

#endif

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

#ifndef HEXMATCH_NOISE_HPP
#define HEXMATCH_NOISE_HPP

#include "hexmatch/circuit.hpp"

namespace hexmatch {

/// The single-parameter error model: bit flips with probability p after every
/// reset and before every measurement, two-qubit depolarizing with
/// probability p after every CX. Basis-change gates around the CX draw no
/// noise of their own.
struct NoiseModel {
    double p = 0.0;
};

/// Returns a copy of the program with noise instructions inserted. The input
/// must be noise-free; gate order and meas_map are preserved.
CircuitProgram apply_noise_model(const CircuitProgram &program, const NoiseModel &model);

/// Removes all noise instructions.
CircuitProgram strip_noise(const CircuitProgram &program);

}  // namespace hexmatch

#endif

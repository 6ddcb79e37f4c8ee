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

#include "hexmatch/noise.hpp"

#include <stdexcept>

namespace hexmatch {

CircuitProgram apply_noise_model(const CircuitProgram &program, const NoiseModel &model) {
    if (model.p < 0.0 || model.p > 1.0) {
        throw std::invalid_argument("noise probability must be in [0, 1]");
    }
    if (program.has_noise()) {
        throw std::invalid_argument("program already contains noise instructions");
    }
    CircuitProgram out;
    out.num_qubits = program.num_qubits;
    out.num_bits = program.num_bits;
    out.meas_map = program.meas_map;
    out.instructions.reserve(program.instructions.size() * 2);
    for (const auto &inst : program.instructions) {
        switch (inst.kind) {
            case InstrKind::Reset:
                out.instructions.push_back(inst);
                out.instructions.push_back(make_x_error(inst.q0, model.p));
                break;
            case InstrKind::MeasureZ:
                out.instructions.push_back(make_x_error(inst.q0, model.p));
                out.instructions.push_back(inst);
                break;
            case InstrKind::CX:
                out.instructions.push_back(inst);
                out.instructions.push_back(make_depolarize2(inst.q0, inst.q1, model.p));
                break;
            default:
                out.instructions.push_back(inst);
                break;
        }
    }
    return out;
}

CircuitProgram strip_noise(const CircuitProgram &program) {
    CircuitProgram out;
    out.num_qubits = program.num_qubits;
    out.num_bits = program.num_bits;
    out.meas_map = program.meas_map;
    for (const auto &inst : program.instructions) {
        if (!is_noise(inst.kind)) {
            out.instructions.push_back(inst);
        }
    }
    return out;
}

}  // namespace hexmatch

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

#include "hexmatch/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hexmatch {

bool is_noise(InstrKind kind) {
    return kind == InstrKind::XError || kind == InstrKind::Depolarize2;
}

int instruction_arity(InstrKind kind) {
    return kind == InstrKind::CX || kind == InstrKind::Depolarize2 ? 2 : 1;
}

const char *instr_name(InstrKind kind) {
    switch (kind) {
        case InstrKind::Reset:
            return "RESET";
        case InstrKind::H:
            return "H";
        case InstrKind::S:
            return "S";
        case InstrKind::SDag:
            return "SDG";
        case InstrKind::CX:
            return "CX";
        case InstrKind::MeasureZ:
            return "MZ";
        case InstrKind::XError:
            return "X_ERROR";
        case InstrKind::Depolarize2:
            return "DEPOLARIZE2";
    }
    return "?";
}

Instruction make_1q(InstrKind kind, uint32_t q) {
    Instruction inst;
    inst.kind = kind;
    inst.q0 = q;
    return inst;
}

Instruction make_cx(uint32_t control, uint32_t target) {
    Instruction inst;
    inst.kind = InstrKind::CX;
    inst.q0 = control;
    inst.q1 = target;
    return inst;
}

Instruction make_measure(uint32_t q, int32_t bit) {
    Instruction inst;
    inst.kind = InstrKind::MeasureZ;
    inst.q0 = q;
    inst.classical_bit = bit;
    return inst;
}

Instruction make_x_error(uint32_t q, double p) {
    Instruction inst;
    inst.kind = InstrKind::XError;
    inst.q0 = q;
    inst.probability = p;
    return inst;
}

Instruction make_depolarize2(uint32_t a, uint32_t b, double p) {
    Instruction inst;
    inst.kind = InstrKind::Depolarize2;
    inst.q0 = a;
    inst.q1 = b;
    inst.probability = p;
    return inst;
}

bool CircuitProgram::has_noise() const {
    return std::any_of(instructions.begin(), instructions.end(), [](const Instruction &inst) {
        return is_noise(inst.kind);
    });
}

void append_parity_gadget(CircuitProgram &program, const Link &link, const MeasContext &ctx) {
    auto measure = [&](uint32_t q) {
        program.instructions.push_back(make_measure(q, static_cast<int32_t>(program.num_bits)));
        program.meas_map.push_back(ctx);
        program.num_bits++;
    };

    if (link.truncated) {
        measure(link.data_qubits[0]);
        return;
    }

    uint32_t d0 = link.data_qubits[0];
    uint32_t d1 = link.data_qubits[1];
    uint32_t aux = link.aux_qubit.value();

    program.instructions.push_back(make_1q(InstrKind::Reset, aux));
    switch (link.type) {
        case LinkType::Z:
            break;
        case LinkType::X:
            program.instructions.push_back(make_1q(InstrKind::H, d0));
            program.instructions.push_back(make_1q(InstrKind::H, d1));
            break;
        case LinkType::Y:
            program.instructions.push_back(make_1q(InstrKind::SDag, d0));
            program.instructions.push_back(make_1q(InstrKind::SDag, d1));
            program.instructions.push_back(make_1q(InstrKind::H, d0));
            program.instructions.push_back(make_1q(InstrKind::H, d1));
            break;
    }
    program.instructions.push_back(make_cx(d0, aux));
    program.instructions.push_back(make_cx(d1, aux));
    switch (link.type) {
        case LinkType::Z:
            break;
        case LinkType::X:
            program.instructions.push_back(make_1q(InstrKind::H, d0));
            program.instructions.push_back(make_1q(InstrKind::H, d1));
            break;
        case LinkType::Y:
            program.instructions.push_back(make_1q(InstrKind::H, d0));
            program.instructions.push_back(make_1q(InstrKind::H, d1));
            program.instructions.push_back(make_1q(InstrKind::S, d0));
            program.instructions.push_back(make_1q(InstrKind::S, d1));
            break;
    }
    measure(aux);
}

void append_plaquette_block(CircuitProgram &program, const Plaquette &plaquette, const CodeSpec &code,
                            uint32_t round) {
    MeasContext ctx;
    ctx.round = round;
    ctx.shift = plaquette.shift;
    ctx.phase = MeasPhase::PlaquetteGroup;
    ctx.plaquette_id = static_cast<int32_t>(plaquette.id);
    for (uint32_t id : plaquette.group_a) {
        ctx.link_id = id;
        append_parity_gadget(program, code.links[id], ctx);
    }
    for (uint32_t id : plaquette.group_b) {
        ctx.link_id = id;
        append_parity_gadget(program, code.links[id], ctx);
    }
}

void append_z_stabilizer_block(CircuitProgram &program, const CodeSpec &code, uint32_t round,
                               uint32_t shift) {
    MeasContext ctx;
    ctx.round = round;
    ctx.shift = shift;
    ctx.phase = MeasPhase::ZBlock;
    ctx.plaquette_id = -1;
    for (uint32_t id : code.z_stabilizers) {
        ctx.link_id = id;
        append_parity_gadget(program, code.links[id], ctx);
    }
}

CircuitProgram build_experiment(const CodeSpec &code, int rounds) {
    if (rounds < 1) {
        throw std::invalid_argument("build_experiment requires at least one round");
    }
    CircuitProgram program;
    program.num_qubits = static_cast<uint32_t>(code.layout.num_qubits());
    for (uint32_t q = 0; q < program.num_qubits; q++) {
        program.instructions.push_back(make_1q(InstrKind::Reset, q));
    }
    for (uint32_t r = 0; r < static_cast<uint32_t>(rounds); r++) {
        for (uint32_t s = 0; s < code.num_shifts; s++) {
            for (const auto &plaquette : code.plaquettes) {
                if (plaquette.shift == s) {
                    append_plaquette_block(program, plaquette, code, r);
                }
            }
            append_z_stabilizer_block(program, code, r, s);
        }
    }
    return program;
}

std::vector<Instruction> parity_gadget(const Link &link) {
    CircuitProgram scratch;
    append_parity_gadget(scratch, link, MeasContext{});
    return scratch.instructions;
}

std::string dump_program(const CircuitProgram &program) {
    std::ostringstream out;
    char buf[64];
    for (const auto &inst : program.instructions) {
        switch (inst.kind) {
            case InstrKind::MeasureZ:
                out << "MZ " << inst.q0 << " -> " << inst.classical_bit << "\n";
                break;
            case InstrKind::XError:
                std::snprintf(buf, sizeof buf, "%.12g", inst.probability);
                out << "X_ERROR(" << buf << ") " << inst.q0 << "\n";
                break;
            case InstrKind::Depolarize2:
                std::snprintf(buf, sizeof buf, "%.12g", inst.probability);
                out << "DEPOLARIZE2(" << buf << ") " << inst.q0 << " " << inst.q1 << "\n";
                break;
            case InstrKind::CX:
                out << "CX " << inst.q0 << " " << inst.q1 << "\n";
                break;
            default:
                out << instr_name(inst.kind) << " " << inst.q0 << "\n";
                break;
        }
    }
    return out.str();
}

void validate_program(const CircuitProgram &program) {
    std::vector<char> bit_seen(program.num_bits, 0);
    for (const auto &inst : program.instructions) {
        int arity = instruction_arity(inst.kind);
        if (inst.q0 >= program.num_qubits) {
            throw std::invalid_argument("instruction qubit out of range");
        }
        if (arity == 2) {
            if (inst.q1 >= program.num_qubits || inst.q1 == inst.q0) {
                throw std::invalid_argument("two-qubit instruction needs two distinct in-range qubits");
            }
        } else if (inst.q1 != kNoQubit) {
            throw std::invalid_argument("single-qubit instruction carries a second qubit");
        }
        if (is_noise(inst.kind)) {
            if (inst.probability < 0 || inst.probability > 1) {
                throw std::invalid_argument("noise probability out of [0, 1]");
            }
        } else if (inst.probability != 0) {
            throw std::invalid_argument("probability set on a non-noise instruction");
        }
        if (inst.kind == InstrKind::MeasureZ) {
            if (inst.classical_bit < 0 || static_cast<uint32_t>(inst.classical_bit) >= program.num_bits) {
                throw std::invalid_argument("measurement bit out of range");
            }
            if (bit_seen[inst.classical_bit]) {
                throw std::invalid_argument("classical bit written twice");
            }
            bit_seen[inst.classical_bit] = 1;
        } else if (inst.classical_bit != -1) {
            throw std::invalid_argument("classical bit set on a non-measurement instruction");
        }
    }
    for (char seen : bit_seen) {
        if (!seen) {
            throw std::invalid_argument("classical bit never written");
        }
    }
    if (program.meas_map.size() != program.num_bits) {
        throw std::invalid_argument("meas_map must cover every classical bit exactly once");
    }
}

}  // namespace hexmatch

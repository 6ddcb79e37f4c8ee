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

#ifndef HEXMATCH_CIRCUIT_HPP
#define HEXMATCH_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hexmatch/code.hpp"

namespace hexmatch {

enum class InstrKind : uint8_t {
    Reset,
    H,
    S,
    SDag,
    CX,
    MeasureZ,
    XError,
    Depolarize2,
};

constexpr uint32_t kNoQubit = UINT32_MAX;

bool is_noise(InstrKind kind);
int instruction_arity(InstrKind kind);  // 1 or 2 qubits
const char *instr_name(InstrKind kind);

struct Instruction {
    InstrKind kind = InstrKind::Reset;
    uint32_t q0 = kNoQubit;
    uint32_t q1 = kNoQubit;
    double probability = 0.0;   // noise kinds only
    int32_t classical_bit = -1;  // MeasureZ only

    bool operator==(const Instruction &other) const = default;
};

Instruction make_1q(InstrKind kind, uint32_t q);
Instruction make_cx(uint32_t control, uint32_t target);
Instruction make_measure(uint32_t q, int32_t bit);
Instruction make_x_error(uint32_t q, double p);
Instruction make_depolarize2(uint32_t a, uint32_t b, double p);

enum class MeasPhase : uint8_t {
    PlaquetteGroup,  // a link gadget inside a plaquette block
    ZBlock,          // a z-stabilizer measurement in the block after a shift
};

/// Provenance of one classical bit.
struct MeasContext {
    uint32_t round = 0;
    uint32_t shift = 0;  // for ZBlock: index of the shift this block follows
    MeasPhase phase = MeasPhase::PlaquetteGroup;
    uint32_t link_id = 0;
    int32_t plaquette_id = -1;  // -1 outside plaquette blocks

    bool operator==(const MeasContext &other) const = default;
};

struct CircuitProgram {
    uint32_t num_qubits = 0;
    uint32_t num_bits = 0;
    std::vector<Instruction> instructions;
    std::vector<MeasContext> meas_map;  // indexed by classical bit

    bool has_noise() const;
};

/// Appends the 2-body parity-measurement gadget for a link: reset the
/// auxiliary, basis changes on the data qubits matching the link type, two CX
/// onto the auxiliary, inverse basis changes, measure the auxiliary. Outcome
/// bit 0 corresponds to the +1 eigenspace of sigma^a (x) sigma^a. Truncated
/// links measure their single data qubit directly.
void append_parity_gadget(CircuitProgram &program, const Link &link, const MeasContext &ctx);

/// Gadgets for group a (ascending link id), then group b.
void append_plaquette_block(CircuitProgram &program, const Plaquette &plaquette, const CodeSpec &code,
                            uint32_t round);

/// Gadgets (or direct measurements) for every z stabilizer, ascending id.
void append_z_stabilizer_block(CircuitProgram &program, const CodeSpec &code, uint32_t round,
                               uint32_t shift);

/// The full T-round experiment: reset all qubits, then per round iterate the
/// shifts in ascending order, emitting that shift's plaquette blocks followed
/// by one z-stabilizer block.
CircuitProgram build_experiment(const CodeSpec &code, int rounds);

/// Standalone gadget (bits numbered from 0), mainly for tests.
std::vector<Instruction> parity_gadget(const Link &link);

/// Plain text, one instruction per line.
std::string dump_program(const CircuitProgram &program);

/// Structural checks: qubit indices in range, arity, probability presence,
/// classical bits forming 0..num_bits-1 exactly once, and a RESET between any
/// two measurements of the same auxiliary qubit are the caller's contract;
/// throws std::invalid_argument on violation.
void validate_program(const CircuitProgram &program);

}  // namespace hexmatch

#endif

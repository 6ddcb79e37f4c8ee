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

#include <gtest/gtest.h>

#include "hexmatch/code.hpp"
#include "hexmatch/runner.hpp"

using namespace hexmatch;

namespace {

std::map<InstrKind, size_t> kind_counts(const CircuitProgram &program) {
    std::map<InstrKind, size_t> counts;
    for (const auto &inst : program.instructions) {
        counts[inst.kind]++;
    }
    return counts;
}

Link test_link(LinkType type) {
    Link link;
    link.type = type;
    link.data_qubits = {0, 1};
    link.aux_qubit = 2;
    return link;
}

}  // namespace

TEST(noise, z_gadget_insertion_counts) {
    CircuitProgram program;
    program.num_qubits = 3;
    append_parity_gadget(program, test_link(LinkType::Z), MeasContext{});
    CircuitProgram noisy = apply_noise_model(program, NoiseModel{0.01});
    auto counts = kind_counts(noisy);
    EXPECT_EQ(counts[InstrKind::XError], 2u);       // after reset + before measure
    EXPECT_EQ(counts[InstrKind::Depolarize2], 2u);  // one per CX
}

TEST(noise, basis_change_gates_draw_no_noise) {
    for (LinkType type : {LinkType::X, LinkType::Y}) {
        CircuitProgram program;
        program.num_qubits = 3;
        append_parity_gadget(program, test_link(type), MeasContext{});
        CircuitProgram noisy = apply_noise_model(program, NoiseModel{0.01});
        auto counts = kind_counts(noisy);
        EXPECT_EQ(counts[InstrKind::XError], 2u);
        EXPECT_EQ(counts[InstrKind::Depolarize2], 2u);
    }
}

TEST(noise, count_invariant_on_experiment) {
    CodeSpec code = build_code(build_heavy_hex_layout("falcon-27"));
    CircuitProgram ideal = build_experiment(code, 3);
    CircuitProgram noisy = apply_noise_model(ideal, NoiseModel{0.02});
    auto ideal_counts = kind_counts(ideal);
    auto noisy_counts = kind_counts(noisy);
    EXPECT_EQ(noisy_counts[InstrKind::XError],
              ideal_counts[InstrKind::Reset] + ideal_counts[InstrKind::MeasureZ]);
    EXPECT_EQ(noisy_counts[InstrKind::Depolarize2], ideal_counts[InstrKind::CX]);
    EXPECT_EQ(noisy.instructions.size(), ideal.instructions.size() +
                                             noisy_counts[InstrKind::XError] +
                                             noisy_counts[InstrKind::Depolarize2]);
}

TEST(noise, strip_recovers_original_verbatim) {
    CodeSpec code = build_code(build_heavy_hex_layout(1, 2));
    CircuitProgram ideal = build_experiment(code, 2);
    CircuitProgram noisy = apply_noise_model(ideal, NoiseModel{0.5});
    CircuitProgram stripped = strip_noise(noisy);
    EXPECT_EQ(stripped.instructions, ideal.instructions);
    EXPECT_EQ(stripped.num_bits, ideal.num_bits);
    EXPECT_EQ(stripped.meas_map, ideal.meas_map);
}

TEST(noise, zero_probability_noise_is_a_no_op) {
    CodeSpec code = build_code(build_heavy_hex_layout(1, 1));
    CircuitProgram ideal = build_experiment(code, 3);
    CircuitProgram noisy = apply_noise_model(ideal, NoiseModel{0.0});
    ShotTable a = run_shots(ideal, 200, 42);
    ShotTable b = run_shots(noisy, 200, 42);
    EXPECT_EQ(a, b);
}

TEST(noise, rejects_invalid_inputs) {
    CodeSpec code = build_code(build_heavy_hex_layout(1, 1));
    CircuitProgram ideal = build_experiment(code, 1);
    EXPECT_THROW(apply_noise_model(ideal, NoiseModel{-0.1}), std::invalid_argument);
    EXPECT_THROW(apply_noise_model(ideal, NoiseModel{1.5}), std::invalid_argument);
    CircuitProgram noisy = apply_noise_model(ideal, NoiseModel{0.1});
    EXPECT_THROW(apply_noise_model(noisy, NoiseModel{0.1}), std::invalid_argument);
}

TEST(noise, meas_map_and_order_preserved) {
    CodeSpec code = build_code(build_heavy_hex_layout("falcon-27"));
    CircuitProgram ideal = build_experiment(code, 2);
    CircuitProgram noisy = apply_noise_model(ideal, NoiseModel{0.03});
    EXPECT_EQ(noisy.meas_map, ideal.meas_map);
    // Non-noise instructions appear in the same relative order.
    std::vector<Instruction> filtered;
    for (const auto &inst : noisy.instructions) {
        if (!is_noise(inst.kind)) {
            filtered.push_back(inst);
        }
    }
    EXPECT_EQ(filtered, ideal.instructions);
    validate_program(noisy);
}

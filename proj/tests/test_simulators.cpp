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

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "hexmatch/runner.hpp"
#include "hexmatch/statevector.hpp"
#include "hexmatch/tableau.hpp"
#include "test_util.hpp"

using namespace hexmatch;
using hexmatch_tests::random_program;

namespace {

Link make_link(LinkType type, std::vector<uint32_t> data, std::optional<uint32_t> aux,
               bool truncated = false) {
    Link link;
    link.type = type;
    link.data_qubits = std::move(data);
    link.aux_qubit = aux;
    link.truncated = truncated;
    return link;
}

CircuitProgram gadget_program(uint32_t num_qubits, const std::vector<Instruction> &prep,
                              const Link &link, int repetitions) {
    CircuitProgram program;
    program.num_qubits = num_qubits;
    program.instructions = prep;
    MeasContext ctx;
    for (int r = 0; r < repetitions; r++) {
        append_parity_gadget(program, link, ctx);
    }
    return program;
}

/// Expectation value of the link operator on the data qubits of a 3-qubit
/// state (data 0, 1; aux 2).
double link_expectation(const StateVectorSim &sim, LinkType type) {
    StateVectorSim copy = sim;
    switch (type) {
        case LinkType::X:
            copy.do_x(0);
            copy.do_x(1);
            break;
        case LinkType::Y:
            copy.do_y(0);
            copy.do_y(1);
            break;
        case LinkType::Z:
            copy.do_z(0);
            copy.do_z(1);
            break;
    }
    std::complex<double> v = 0.0;
    const auto &a = sim.amplitudes();
    const auto &b = copy.amplitudes();
    for (size_t i = 0; i < a.size(); i++) {
        v += std::conj(a[i]) * b[i];
    }
    return v.real();
}

}  // namespace

TEST(tableau, fresh_qubit_measures_zero) {
    TableauSim sim(3);
    ShotRng rng = ShotRng::for_shot(1, 0);
    EXPECT_TRUE(sim.z_deterministic(0));
    EXPECT_EQ(sim.do_measure_z(0, rng), 0);
    sim.do_x(1);
    EXPECT_EQ(sim.do_measure_z(1, rng), 1);
    sim.check_invariants();
}

TEST(tableau, h_then_measure_is_uniform) {
    int ones = 0;
    const int shots = 10000;
    for (int s = 0; s < shots; s++) {
        TableauSim sim(1);
        ShotRng rng = ShotRng::for_shot(7, static_cast<uint64_t>(s));
        sim.do_h(0);
        EXPECT_FALSE(sim.z_deterministic(0));
        int bit = sim.do_measure_z(0, rng);
        ones += bit;
        // Projective: repeating gives the same answer, now deterministic.
        EXPECT_TRUE(sim.z_deterministic(0));
        EXPECT_EQ(sim.do_measure_z(0, rng), bit);
    }
    double freq = static_cast<double>(ones) / shots;
    EXPECT_NEAR(freq, 0.5, 0.02);
}

TEST(tableau, depolarize2_at_full_strength) {
    // Enumerating the 15 non-identity two-qubit Paulis: those with X or Y on
    // at least one qubit flip at least one Z outcome.
    int flipping = 0;
    for (int k = 1; k <= 15; k++) {
        int p0 = k >> 2;
        int p1 = k & 3;
        bool flips = p0 == 1 || p0 == 2 || p1 == 1 || p1 == 2;
        flipping += flips;
    }
    ASSERT_EQ(flipping, 12);
    double expected = flipping / 15.0;

    const int shots = 10000;
    int not_00 = 0;
    for (int s = 0; s < shots; s++) {
        TableauSim sim(2);
        ShotRng rng = ShotRng::for_shot(11, static_cast<uint64_t>(s));
        Instruction dep = make_depolarize2(0, 1, 1.0);
        sim.apply(dep, rng);
        int b0 = sim.do_measure_z(0, rng);
        int b1 = sim.do_measure_z(1, rng);
        not_00 += (b0 || b1);
    }
    EXPECT_NEAR(static_cast<double>(not_00) / shots, expected, 0.02);
}

TEST(simulators, gadget_is_projective_link_measurement) {
    // For each link type and many random stabilizer input states: the gadget
    // outcome has the distribution of a projective measurement of the link
    // operator, the post-measurement state is the corresponding eigenstate,
    // and repetition returns the same bit.
    std::mt19937 prep_rng(2024);
    for (LinkType type : {LinkType::X, LinkType::Y, LinkType::Z}) {
        Link link = make_link(type, {0, 1}, 2);
        for (int trial = 0; trial < 60; trial++) {
            // Random 2-qubit Clifford prep on the data qubits.
            std::vector<Instruction> prep;
            for (uint32_t q = 0; q < 3; q++) {
                prep.push_back(make_1q(InstrKind::Reset, q));
            }
            uint32_t n_prep = prep_rng() % 10;
            for (uint32_t i = 0; i < n_prep; i++) {
                switch (prep_rng() % 4) {
                    case 0:
                        prep.push_back(make_1q(InstrKind::H, prep_rng() % 2));
                        break;
                    case 1:
                        prep.push_back(make_1q(InstrKind::S, prep_rng() % 2));
                        break;
                    case 2:
                        prep.push_back(make_1q(InstrKind::SDag, prep_rng() % 2));
                        break;
                    default: {
                        uint32_t c = prep_rng() % 2;
                        prep.push_back(make_cx(c, c ^ 1));
                        break;
                    }
                }
            }

            // Expected distribution from the prepared state.
            StateVectorSim probe(3);
            ShotRng prep_shot = ShotRng::for_shot(99, trial);
            for (const auto &inst : prep) {
                probe.apply(inst, prep_shot);
            }
            double expectation = link_expectation(probe, type);
            double p_plus = (1.0 + expectation) / 2.0;

            int plus_seen = 0;
            const int shots = 64;
            for (int s = 0; s < shots; s++) {
                StateVectorSim sim(3);
                ShotRng rng = ShotRng::for_shot(1000 + trial, s);
                ShotRng replay = ShotRng::for_shot(99, trial);
                for (const auto &inst : prep) {
                    sim.apply(inst, replay);
                }
                CircuitProgram gadgets = gadget_program(3, {}, link, 2);
                int bits[2];
                int idx = 0;
                for (const auto &inst : gadgets.instructions) {
                    auto out = sim.apply(inst, rng);
                    if (out.has_value()) {
                        bits[idx++] = *out;
                    }
                }
                ASSERT_EQ(idx, 2);
                EXPECT_EQ(bits[0], bits[1]) << "gadget repetition differs";
                plus_seen += bits[0] == 0;
                // Post-measurement state is the projected eigenstate.
                double post = link_expectation(sim, type);
                EXPECT_NEAR(post, bits[0] == 0 ? 1.0 : -1.0, 1e-9);
            }
            if (p_plus > 0.999) {
                EXPECT_EQ(plus_seen, shots);
            } else if (p_plus < 0.001) {
                EXPECT_EQ(plus_seen, 0);
            } else {
                EXPECT_NEAR(p_plus, 0.5, 1e-9);
                EXPECT_GT(plus_seen, 0);
                EXPECT_LT(plus_seen, shots);
            }
        }
    }
}

TEST(simulators, z_gadget_trivial_cases) {
    Link link = make_link(LinkType::Z, {0, 1}, 2);
    // |00> is a +1 eigenstate of ZZ: bit 0, state unchanged.
    CircuitProgram p0 = gadget_program(3, {}, link, 1);
    ShotTable t0 = run_shots(p0, 4, 5);
    for (uint64_t s = 0; s < 4; s++) {
        EXPECT_EQ(t0.get(s, 0), 0);
    }
    // |10> is a -1 eigenstate; flip qubit 0 with X = H S S H.
    std::vector<Instruction> flip = {make_1q(InstrKind::H, 0), make_1q(InstrKind::S, 0),
                                     make_1q(InstrKind::S, 0), make_1q(InstrKind::H, 0)};
    CircuitProgram p1 = gadget_program(3, flip, link, 1);
    ShotTable t1 = run_shots(p1, 4, 5);
    ShotTable t1o = run_shots_statevector(p1, 4, 5);
    for (uint64_t s = 0; s < 4; s++) {
        EXPECT_EQ(t1.get(s, 0), 1);
        EXPECT_EQ(t1o.get(s, 0), 1);
    }
}

TEST(simulators, x_gadget_on_zero_state_random_but_repeatable) {
    Link link = make_link(LinkType::X, {0, 1}, 2);
    CircuitProgram program = gadget_program(3, {}, link, 2);
    ShotTable table = run_shots(program, 1000, 17);
    int ones = 0;
    for (uint64_t s = 0; s < table.num_shots; s++) {
        EXPECT_EQ(table.get(s, 0), table.get(s, 1));
        ones += table.get(s, 0);
    }
    EXPECT_GT(ones, 400);
    EXPECT_LT(ones, 600);
}

TEST(simulators, tableau_invariants_hold_through_random_programs) {
    std::mt19937 rng(31415);
    CircuitProgram program = random_program(rng, 6, 1100, 0.05);
    TableauSim sim(6);
    ShotRng shot_rng = ShotRng::for_shot(3, 0);
    size_t steps = 0;
    for (const auto &inst : program.instructions) {
        sim.apply(inst, shot_rng);
        sim.check_invariants();
        steps++;
    }
    EXPECT_GE(steps, 1000u);
}

TEST(simulators, duplicated_measurements_agree_everywhere) {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 5; trial++) {
        CircuitProgram base = random_program(rng, 5, 40, 0.1);
        CircuitProgram doubled;
        doubled.num_qubits = base.num_qubits;
        std::vector<std::pair<uint32_t, uint32_t>> pairs;
        for (const auto &inst : base.instructions) {
            if (inst.kind == InstrKind::MeasureZ) {
                Instruction first = make_measure(inst.q0, static_cast<int32_t>(doubled.num_bits));
                Instruction second = make_measure(inst.q0, static_cast<int32_t>(doubled.num_bits + 1));
                doubled.instructions.push_back(first);
                doubled.instructions.push_back(second);
                doubled.meas_map.push_back(MeasContext{});
                doubled.meas_map.push_back(MeasContext{});
                pairs.emplace_back(doubled.num_bits, doubled.num_bits + 1);
                doubled.num_bits += 2;
            } else {
                doubled.instructions.push_back(inst);
            }
        }
        ShotTable table = run_shots(doubled, 300, 100 + trial);
        for (uint64_t s = 0; s < table.num_shots; s++) {
            for (auto [a, b] : pairs) {
                ASSERT_EQ(table.get(s, a), table.get(s, b));
            }
        }
    }
}

TEST(simulators, engines_agree_bit_for_bit) {
    // Both engines share the draw discipline, so on stabilizer circuits they
    // produce identical tables, noise included.
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 8; trial++) {
        uint32_t qubits = 2 + trial % 5;
        CircuitProgram program = random_program(rng, qubits, 60, trial % 2 ? 0.15 : 0.0);
        ShotTable a = run_shots(program, 500, 9000 + trial);
        ShotTable b = run_shots_statevector(program, 500, 9000 + trial);
        EXPECT_EQ(a, b) << "trial " << trial;
    }
}

TEST(simulators, deterministic_program_identical_tables) {
    CircuitProgram program;
    program.num_qubits = 3;
    for (uint32_t q = 0; q < 3; q++) {
        program.instructions.push_back(make_1q(InstrKind::Reset, q));
    }
    // X on 1 via H S S H, CX chain, then measure everything twice.
    program.instructions.push_back(make_1q(InstrKind::H, 1));
    program.instructions.push_back(make_1q(InstrKind::S, 1));
    program.instructions.push_back(make_1q(InstrKind::S, 1));
    program.instructions.push_back(make_1q(InstrKind::H, 1));
    program.instructions.push_back(make_cx(1, 2));
    for (int rep = 0; rep < 2; rep++) {
        for (uint32_t q = 0; q < 3; q++) {
            program.instructions.push_back(make_measure(q, static_cast<int32_t>(program.num_bits)));
            program.meas_map.push_back(MeasContext{});
            program.num_bits++;
        }
    }
    ShotTable a = run_shots(program, 16, 1);
    ShotTable b = run_shots_statevector(program, 16, 1);
    EXPECT_EQ(a, b);
    for (uint64_t s = 0; s < a.num_shots; s++) {
        EXPECT_EQ(a.get(s, 0), 0);
        EXPECT_EQ(a.get(s, 1), 1);
        EXPECT_EQ(a.get(s, 2), 1);
    }
}

TEST(simulators, statevector_rejects_large_programs) {
    CircuitProgram program;
    program.num_qubits = 13;
    program.instructions.push_back(make_1q(InstrKind::H, 0));
    EXPECT_THROW(run_shots_statevector(program, 1, 0), std::invalid_argument);
}

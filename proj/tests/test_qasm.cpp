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

#include "hexmatch/qasm.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hexmatch/code.hpp"
#include "hexmatch/noise.hpp"

using namespace hexmatch;

TEST(qasm, empty_program) {
    CircuitProgram program;
    program.num_qubits = 4;
    EXPECT_EQ(export_openqasm(program),
              "OPENQASM 2.0;\n"
              "include \"qelib1.inc\";\n"
              "qreg q[4];\n"
              "creg c[0];\n");
}

TEST(qasm, single_z_gadget) {
    Link link;
    link.type = LinkType::Z;
    link.data_qubits = {0, 1};
    link.aux_qubit = 2;
    CircuitProgram program;
    program.num_qubits = 3;
    append_parity_gadget(program, link, MeasContext{});
    EXPECT_EQ(export_openqasm(program),
              "OPENQASM 2.0;\n"
              "include \"qelib1.inc\";\n"
              "qreg q[3];\n"
              "creg c[1];\n"
              "reset q[2];\n"
              "cx q[0],q[2];\n"
              "cx q[1],q[2];\n"
              "measure q[2] -> c[0];\n");
}

TEST(qasm, round_trip_full_experiment) {
    CodeSpec code = build_code(build_heavy_hex_layout("falcon-27"));
    CircuitProgram program = build_experiment(code, 3);
    std::string text = export_openqasm(program);

    size_t measures = 0;
    size_t pos = 0;
    while ((pos = text.find("measure ", pos)) != std::string::npos) {
        measures++;
        pos++;
    }
    EXPECT_EQ(measures, program.num_bits);

    CircuitProgram parsed = parse_openqasm(text);
    EXPECT_EQ(parsed.num_qubits, program.num_qubits);
    EXPECT_EQ(parsed.num_bits, program.num_bits);
    EXPECT_EQ(parsed.instructions, program.instructions);
}

TEST(qasm, rejects_noise) {
    CodeSpec code = build_code(build_heavy_hex_layout(1, 1));
    CircuitProgram noisy = apply_noise_model(build_experiment(code, 1), NoiseModel{0.01});
    EXPECT_THROW(export_openqasm(noisy), std::invalid_argument);
}

TEST(qasm, parser_rejects_junk) {
    EXPECT_THROW(parse_openqasm("qreg q[2];"), std::invalid_argument);  // no header
    EXPECT_THROW(parse_openqasm("OPENQASM 2.0;\nrz(0.1) q[0];"), std::invalid_argument);
}

TEST(qasm, golden_single_hexagon) {
    CodeSpec code = build_code(build_heavy_hex_layout(1, 1));
    CircuitProgram program = build_experiment(code, 1);
    std::string text = export_openqasm(program);

    std::string path = std::string(HEXMATCH_SOURCE_DIR) + "/tests/golden/hex1_t1.qasm";
    std::ifstream in(path, std::ios::binary);
    ASSERT_TRUE(in) << "missing golden file " << path;
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(text, buf.str());
}

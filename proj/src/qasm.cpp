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

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hexmatch {

std::string export_openqasm(const CircuitProgram &program) {
    if (program.has_noise()) {
        throw std::invalid_argument("OpenQASM export rejects noise instructions; strip them first");
    }
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << program.num_qubits << "];\n";
    out << "creg c[" << program.num_bits << "];\n";
    for (const auto &inst : program.instructions) {
        switch (inst.kind) {
            case InstrKind::Reset:
                out << "reset q[" << inst.q0 << "];\n";
                break;
            case InstrKind::H:
                out << "h q[" << inst.q0 << "];\n";
                break;
            case InstrKind::S:
                out << "s q[" << inst.q0 << "];\n";
                break;
            case InstrKind::SDag:
                out << "sdg q[" << inst.q0 << "];\n";
                break;
            case InstrKind::CX:
                out << "cx q[" << inst.q0 << "],q[" << inst.q1 << "];\n";
                break;
            case InstrKind::MeasureZ:
                out << "measure q[" << inst.q0 << "] -> c[" << inst.classical_bit << "];\n";
                break;
            default:
                throw std::invalid_argument("instruction kind has no OpenQASM form");
        }
    }
    return out.str();
}

namespace {

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_statement(const std::string &stmt) {
    throw std::invalid_argument("unsupported OpenQASM statement: " + stmt);
}

}  // namespace

CircuitProgram parse_openqasm(const std::string &text) {
    CircuitProgram program;
    bool saw_header = false;

    std::string cleaned;
    cleaned.reserve(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') {
                i++;
            }
        }
        if (i < text.size()) {
            cleaned.push_back(text[i]);
        }
    }

    std::istringstream in(cleaned);
    std::string stmt;
    while (std::getline(in, stmt, ';')) {
        stmt = trim(stmt);
        if (stmt.empty()) {
            continue;
        }
        unsigned a = 0;
        unsigned b = 0;
        if (stmt.rfind("OPENQASM", 0) == 0) {
            saw_header = true;
            continue;
        }
        if (stmt.rfind("include", 0) == 0) {
            continue;
        }
        if (std::sscanf(stmt.c_str(), "qreg q[%u]", &a) == 1) {
            program.num_qubits = a;
            continue;
        }
        if (std::sscanf(stmt.c_str(), "creg c[%u]", &a) == 1) {
            program.num_bits = a;
            continue;
        }
        if (std::sscanf(stmt.c_str(), "reset q[%u]", &a) == 1) {
            program.instructions.push_back(make_1q(InstrKind::Reset, a));
            continue;
        }
        if (std::sscanf(stmt.c_str(), "h q[%u]", &a) == 1) {
            program.instructions.push_back(make_1q(InstrKind::H, a));
            continue;
        }
        if (std::sscanf(stmt.c_str(), "sdg q[%u]", &a) == 1) {
            program.instructions.push_back(make_1q(InstrKind::SDag, a));
            continue;
        }
        if (std::sscanf(stmt.c_str(), "s q[%u]", &a) == 1) {
            program.instructions.push_back(make_1q(InstrKind::S, a));
            continue;
        }
        if (std::sscanf(stmt.c_str(), "cx q[%u],q[%u]", &a, &b) == 2) {
            program.instructions.push_back(make_cx(a, b));
            continue;
        }
        if (std::sscanf(stmt.c_str(), "measure q[%u] -> c[%u]", &a, &b) == 2) {
            program.instructions.push_back(make_measure(a, static_cast<int32_t>(b)));
            continue;
        }
        bad_statement(stmt);
    }
    if (!saw_header) {
        throw std::invalid_argument("missing OPENQASM 2.0 header");
    }
    return program;
}

}  // namespace hexmatch

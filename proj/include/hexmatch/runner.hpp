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

#ifndef HEXMATCH_RUNNER_HPP
#define HEXMATCH_RUNNER_HPP

#include <cstdint>
#include <iosfwd>

#include "hexmatch/circuit.hpp"

namespace hexmatch {

/// Dense bit matrix of measurement results, one row per shot.
struct ShotTable {
    uint64_t num_shots = 0;
    uint32_t num_bits = 0;
    std::vector<uint64_t> words;  // row-major, words_per_shot() per row

    ShotTable() = default;
    ShotTable(uint64_t shots, uint32_t bits);

    size_t words_per_shot() const {
        return (static_cast<size_t>(num_bits) + 63) / 64;
    }
    int get(uint64_t shot, uint32_t bit) const {
        return (words[shot * words_per_shot() + (bit >> 6)] >> (bit & 63)) & 1;
    }
    void set(uint64_t shot, uint32_t bit, int value) {
        uint64_t mask = uint64_t{1} << (bit & 63);
        uint64_t &w = words[shot * words_per_shot() + (bit >> 6)];
        w = value ? (w | mask) : (w & ~mask);
    }

    bool operator==(const ShotTable &other) const = default;
};

/// Runs the program on the stabilizer tableau engine. Shot s draws from a
/// stream derived solely from (seed, s): results do not depend on thread
/// count or execution order. threads == 0 picks a hardware default.
ShotTable run_shots(const CircuitProgram &program, uint64_t num_shots, uint64_t seed, int threads = 0);

/// Same contract on the dense state-vector oracle (num_qubits <= 12).
ShotTable run_shots_statevector(const CircuitProgram &program, uint64_t num_shots, uint64_t seed,
                                int threads = 0);

/// Binary format: "HXSHOT1\n" magic, u64 num_shots, u32 num_bits (little
/// endian), then row-major rows of ceil(num_bits/8) bytes, LSB first.
void write_shot_table(const ShotTable &table, std::ostream &out);
ShotTable read_shot_table(std::istream &in);

/// One line of 0/1 characters per shot.
void write_shot_table_csv(const ShotTable &table, std::ostream &out);

}  // namespace hexmatch

#endif

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

#include "hexmatch/runner.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hexmatch/rng.hpp"
#include "hexmatch/statevector.hpp"
#include "hexmatch/tableau.hpp"

namespace hexmatch {

ShotTable::ShotTable(uint64_t shots, uint32_t bits) : num_shots(shots), num_bits(bits) {
    words.assign(static_cast<size_t>(shots) * words_per_shot(), 0);
}

namespace {

template <typename Sim>
void run_range(const CircuitProgram &program, ShotTable &table, uint64_t seed, uint64_t begin,
               uint64_t end) {
    for (uint64_t shot = begin; shot < end; shot++) {
        Sim sim(program.num_qubits);
        ShotRng rng = ShotRng::for_shot(seed, shot);
        for (const auto &inst : program.instructions) {
            auto outcome = sim.apply(inst, rng);
            if (outcome.has_value()) {
                table.set(shot, static_cast<uint32_t>(inst.classical_bit), *outcome);
            }
        }
    }
}

template <typename Sim>
ShotTable run_impl(const CircuitProgram &program, uint64_t num_shots, uint64_t seed, int threads) {
    if (num_shots < 1) {
        throw std::invalid_argument("num_shots must be at least 1");
    }
    if (program.num_qubits == 0) {
        throw std::invalid_argument("program has no qubits");
    }
    ShotTable table(num_shots, program.num_bits);
    if (program.num_bits == 0) {
        return table;
    }

    unsigned hw = std::thread::hardware_concurrency();
    unsigned want = threads > 0 ? static_cast<unsigned>(threads) : std::min(hw ? hw : 1u, 8u);
    // Rows are word aligned, so disjoint shot ranges touch disjoint words.
    uint64_t per_thread = 1024;
    unsigned usable = static_cast<unsigned>(std::min<uint64_t>(want, (num_shots + per_thread - 1) / per_thread));
    if (usable <= 1) {
        run_range<Sim>(program, table, seed, 0, num_shots);
        return table;
    }
    std::vector<std::thread> workers;
    uint64_t chunk = (num_shots + usable - 1) / usable;
    for (unsigned t = 0; t < usable; t++) {
        uint64_t begin = t * chunk;
        uint64_t end = std::min(num_shots, begin + chunk);
        if (begin >= end) {
            break;
        }
        workers.emplace_back([&, begin, end] {
            run_range<Sim>(program, table, seed, begin, end);
        });
    }
    for (auto &w : workers) {
        w.join();
    }
    return table;
}

}  // namespace

ShotTable run_shots(const CircuitProgram &program, uint64_t num_shots, uint64_t seed, int threads) {
    return run_impl<TableauSim>(program, num_shots, seed, threads);
}

ShotTable run_shots_statevector(const CircuitProgram &program, uint64_t num_shots, uint64_t seed,
                                int threads) {
    if (program.num_qubits > StateVectorSim::kMaxQubits) {
        throw std::invalid_argument("state-vector oracle supports at most 12 qubits");
    }
    return run_impl<StateVectorSim>(program, num_shots, seed, threads);
}

namespace {
constexpr char kMagic[8] = {'H', 'X', 'S', 'H', 'O', 'T', '1', '\n'};
}

void write_shot_table(const ShotTable &table, std::ostream &out) {
    out.write(kMagic, sizeof kMagic);
    uint64_t shots = table.num_shots;
    uint32_t bits = table.num_bits;
    uint8_t header[12];
    for (int i = 0; i < 8; i++) {
        header[i] = static_cast<uint8_t>(shots >> (8 * i));
    }
    for (int i = 0; i < 4; i++) {
        header[8 + i] = static_cast<uint8_t>(bits >> (8 * i));
    }
    out.write(reinterpret_cast<const char *>(header), sizeof header);
    size_t row_bytes = (table.num_bits + 7) / 8;
    std::vector<uint8_t> row(row_bytes);
    for (uint64_t s = 0; s < table.num_shots; s++) {
        std::fill(row.begin(), row.end(), 0);
        for (uint32_t b = 0; b < table.num_bits; b++) {
            if (table.get(s, b)) {
                row[b >> 3] |= uint8_t(1u << (b & 7));
            }
        }
        out.write(reinterpret_cast<const char *>(row.data()), static_cast<std::streamsize>(row_bytes));
    }
}

ShotTable read_shot_table(std::istream &in) {
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof magic) != 0) {
        throw std::invalid_argument("not a shot table file");
    }
    uint8_t header[12];
    in.read(reinterpret_cast<char *>(header), sizeof header);
    if (!in) {
        throw std::invalid_argument("truncated shot table header");
    }
    uint64_t shots = 0;
    uint32_t bits = 0;
    for (int i = 7; i >= 0; i--) {
        shots = (shots << 8) | header[i];
    }
    for (int i = 3; i >= 0; i--) {
        bits = (bits << 8) | header[8 + i];
    }
    ShotTable table(shots, bits);
    size_t row_bytes = (bits + 7) / 8;
    std::vector<uint8_t> row(row_bytes);
    for (uint64_t s = 0; s < shots; s++) {
        in.read(reinterpret_cast<char *>(row.data()), static_cast<std::streamsize>(row_bytes));
        if (!in) {
            throw std::invalid_argument("truncated shot table rows");
        }
        for (uint32_t b = 0; b < bits; b++) {
            table.set(s, b, (row[b >> 3] >> (b & 7)) & 1);
        }
    }
    return table;
}

void write_shot_table_csv(const ShotTable &table, std::ostream &out) {
    for (uint64_t s = 0; s < table.num_shots; s++) {
        for (uint32_t b = 0; b < table.num_bits; b++) {
            out.put(table.get(s, b) ? '1' : '0');
        }
        out.put('\n');
    }
}

}  // namespace hexmatch

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

#include "hexmatch/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hexmatch/noise.hpp"

namespace hexmatch {

namespace {

uint32_t round_count(const CircuitProgram &program) {
    uint32_t rounds = 0;
    for (const auto &ctx : program.meas_map) {
        rounds = std::max(rounds, ctx.round + 1);
    }
    return rounds;
}

double binomial_stderr(double mean, uint64_t samples) {
    if (samples == 0) {
        return 0.0;
    }
    return std::sqrt(mean * (1.0 - mean) / static_cast<double>(samples));
}

}  // namespace

PlaquetteRoundBits plaquette_outcomes(const ShotTable &shots, const CircuitProgram &program,
                                      const CodeSpec &code) {
    PlaquetteRoundBits out;
    out.num_shots = shots.num_shots;
    out.rounds = round_count(program);
    out.num_plaquettes = static_cast<uint32_t>(code.plaquettes.size());
    out.bits.assign(static_cast<size_t>(out.num_shots) * out.rounds * out.num_plaquettes, 0);

    // bit -> (round, plaquette), plus a completeness check of six bits per cell.
    std::vector<uint32_t> cell_bits(static_cast<size_t>(out.rounds) * out.num_plaquettes, 0);
    std::vector<std::pair<uint32_t, uint32_t>> targets;  // (bit, cell)
    for (uint32_t bit = 0; bit < program.num_bits; bit++) {
        const MeasContext &ctx = program.meas_map[bit];
        if (ctx.phase != MeasPhase::PlaquetteGroup) {
            continue;
        }
        if (ctx.plaquette_id < 0 || static_cast<uint32_t>(ctx.plaquette_id) >= out.num_plaquettes) {
            throw std::invalid_argument("meas_map references an unknown plaquette");
        }
        uint32_t cell = ctx.round * out.num_plaquettes + static_cast<uint32_t>(ctx.plaquette_id);
        cell_bits[cell]++;
        targets.emplace_back(bit, cell);
    }
    for (uint32_t cell = 0; cell < cell_bits.size(); cell++) {
        if (cell_bits[cell] != 6) {
            throw std::invalid_argument("meas_map is missing plaquette link measurements");
        }
    }

    for (uint64_t s = 0; s < shots.num_shots; s++) {
        size_t base = static_cast<size_t>(s) * out.rounds * out.num_plaquettes;
        for (const auto &[bit, cell] : targets) {
            out.bits[base + cell] ^= static_cast<uint8_t>(shots.get(s, bit));
        }
    }
    return out;
}

void compute_pW(const PlaquetteRoundBits &w, ExperimentStats &stats) {
    if (w.rounds < 2) {
        throw std::invalid_argument("p_W needs at least two rounds");
    }
    stats.num_shots = w.num_shots;
    stats.rounds = w.rounds;
    uint64_t total_changes = 0;
    for (uint32_t p = 0; p < w.num_plaquettes; p++) {
        uint64_t changes = 0;
        for (uint64_t s = 0; s < w.num_shots; s++) {
            for (uint32_t r = 1; r < w.rounds; r++) {
                changes += w.get(s, r, p) != w.get(s, r - 1, p);
            }
        }
        stats.per_plaquette_pW[p] =
            static_cast<double>(changes) / (static_cast<double>(w.num_shots) * (w.rounds - 1));
        total_changes += changes;
    }
    uint64_t samples = w.num_shots * w.num_plaquettes * (w.rounds - 1);
    stats.mean_pW = samples ? static_cast<double>(total_changes) / static_cast<double>(samples) : 0.0;
    stats.stderr_pW = binomial_stderr(stats.mean_pW, samples);
}

void compute_pZ(const ShotTable &shots, const CircuitProgram &program, const CodeSpec &code,
                ExperimentStats &stats) {
    uint32_t rounds = round_count(program);
    uint32_t num_shifts = code.num_shifts;
    stats.num_shots = shots.num_shots;
    stats.rounds = rounds;

    // (round, shift, link) -> z-block bit
    std::map<std::tuple<uint32_t, uint32_t, uint32_t>, uint32_t> z_bit;
    for (uint32_t bit = 0; bit < program.num_bits; bit++) {
        const MeasContext &ctx = program.meas_map[bit];
        if (ctx.phase == MeasPhase::ZBlock) {
            z_bit[{ctx.round, ctx.shift, ctx.link_id}] = bit;
        }
    }
    auto block_xor = [&](uint64_t shot, uint32_t round, uint32_t shift, const Plaquette &p) {
        int v = 0;
        for (uint32_t link : p.incident_z_links) {
            auto it = z_bit.find({round, shift, link});
            if (it == z_bit.end()) {
                throw std::invalid_argument("meas_map is missing a z-stabilizer measurement");
            }
            v ^= shots.get(shot, it->second);
        }
        return v;
    };

    uint64_t total_changes = 0;
    uint64_t total_samples = 0;
    for (const auto &p : code.plaquettes) {
        uint64_t changes = 0;
        uint64_t samples = 0;
        for (uint32_t r = 0; r < rounds; r++) {
            uint32_t before_round;
            uint32_t before_shift;
            if (p.shift > 0) {
                before_round = r;
                before_shift = p.shift - 1;
            } else if (r > 0) {
                before_round = r - 1;
                before_shift = num_shifts - 1;
            } else {
                continue;  // first shift of round 0: nothing precedes it
            }
            for (uint64_t s = 0; s < shots.num_shots; s++) {
                int before = block_xor(s, before_round, before_shift, p);
                int after = block_xor(s, r, p.shift, p);
                changes += before != after;
                samples++;
            }
        }
        stats.per_plaquette_pZ[p.id] =
            samples ? static_cast<double>(changes) / static_cast<double>(samples) : 0.0;
        total_changes += changes;
        total_samples += samples;
    }
    stats.mean_pZ =
        total_samples ? static_cast<double>(total_changes) / static_cast<double>(total_samples) : 0.0;
    stats.stderr_pZ = binomial_stderr(stats.mean_pZ, total_samples);
}

ExperimentStats compute_stats(const ShotTable &shots, const CircuitProgram &program,
                              const CodeSpec &code) {
    ExperimentStats stats;
    PlaquetteRoundBits w = plaquette_outcomes(shots, program, code);
    compute_pW(w, stats);
    compute_pZ(shots, program, code, stats);
    return stats;
}

std::vector<SweepPoint> run_noise_sweep(const CodeSpec &code, int rounds, uint64_t shots,
                                        uint64_t seed, std::vector<double> ps, int threads) {
    std::sort(ps.begin(), ps.end());
    CircuitProgram ideal = build_experiment(code, rounds);
    std::vector<SweepPoint> out;
    for (double p : ps) {
        CircuitProgram noisy = apply_noise_model(ideal, NoiseModel{p});
        ShotTable table = run_shots(noisy, shots, seed, threads);
        SweepPoint point;
        point.p = p;
        point.stats = compute_stats(table, noisy, code);
        out.push_back(std::move(point));
    }
    return out;
}

void write_stats_csv_header(std::ostream &out) {
    out << "device_or_p,mean_pW,stderr_pW,mean_pZ,stderr_pZ,num_shots,T\n";
}

void write_stats_csv_row(std::ostream &out, const std::string &device_or_p,
                         const ExperimentStats &stats) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%.6f,%.6f,%.6f,%.6f,%llu,%u\n", device_or_p.c_str(),
                  stats.mean_pW, stats.stderr_pW, stats.mean_pZ, stats.stderr_pZ,
                  static_cast<unsigned long long>(stats.num_shots), stats.rounds);
    out << buf;
}

}  // namespace hexmatch

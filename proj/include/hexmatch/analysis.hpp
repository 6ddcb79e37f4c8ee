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

#ifndef HEXMATCH_ANALYSIS_HPP
#define HEXMATCH_ANALYSIS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "hexmatch/circuit.hpp"
#include "hexmatch/code.hpp"
#include "hexmatch/runner.hpp"

namespace hexmatch {

/// Plaquette values per shot and round: the XOR of the six link-gadget bits
/// of that plaquette's block.
struct PlaquetteRoundBits {
    uint64_t num_shots = 0;
    uint32_t rounds = 0;
    uint32_t num_plaquettes = 0;
    std::vector<uint8_t> bits;  // [shot][round][plaquette]

    uint8_t get(uint64_t shot, uint32_t round, uint32_t plaquette) const {
        return bits[(shot * rounds + round) * num_plaquettes + plaquette];
    }
};

PlaquetteRoundBits plaquette_outcomes(const ShotTable &shots, const CircuitProgram &program,
                                      const CodeSpec &code);

struct ExperimentStats {
    std::map<uint32_t, double> per_plaquette_pW;
    std::map<uint32_t, double> per_plaquette_pZ;
    double mean_pW = 0.0;
    double stderr_pW = 0.0;
    double mean_pZ = 0.0;
    double stderr_pZ = 0.0;
    uint64_t num_shots = 0;
    uint32_t rounds = 0;
};

/// Frequency with which a plaquette's value differs from the previous round,
/// averaged over plaquettes and the rounds 1..T-1. Requires rounds >= 2.
void compute_pW(const PlaquetteRoundBits &w, ExperimentStats &stats);

/// Frequency with which the XOR of a plaquette's incident z-stabilizer bits
/// differs between the z block just before its shift and the z block ending
/// its shift. The first shift of round 0 has no preceding block and is
/// skipped.
void compute_pZ(const ShotTable &shots, const CircuitProgram &program, const CodeSpec &code,
                ExperimentStats &stats);

ExperimentStats compute_stats(const ShotTable &shots, const CircuitProgram &program,
                              const CodeSpec &code);

struct SweepPoint {
    double p = 0.0;
    ExperimentStats stats;
};

/// Builds the T-round experiment once, then for each noise strength applies
/// the error model, samples, and reduces. Points are computed in ascending p
/// order.
std::vector<SweepPoint> run_noise_sweep(const CodeSpec &code, int rounds, uint64_t shots,
                                        uint64_t seed, std::vector<double> ps, int threads = 0);

/// CSV columns: device_or_p, mean_pW, stderr_pW, mean_pZ, stderr_pZ,
/// num_shots, T.
void write_stats_csv_header(std::ostream &out);
void write_stats_csv_row(std::ostream &out, const std::string &device_or_p,
                         const ExperimentStats &stats);

}  // namespace hexmatch

#endif

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

#ifndef HEXMATCH_RNG_HPP
#define HEXMATCH_RNG_HPP

#include <cstdint>

namespace hexmatch {

/// SplitMix64 output function; (seed, counter) -> word. Used as a counter
/// based derivation so that per-shot streams depend only on (seed, shot).
inline uint64_t splitmix64_at(uint64_t seed, uint64_t counter) {
    uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256** (Blackman & Vigna, public domain reference implementation).
struct Xoshiro256ss {
    uint64_t s[4]{1, 0, 0, 0};

    static uint64_t rotl(uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    uint64_t next() {
        uint64_t result = rotl(s[1] * 5, 7) * 9;
        uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }
};

/// Per-shot random streams. Measurement randomness and noise sampling draw
/// from separate streams so that zero-probability noise leaves measurement
/// outcomes bit-identical to the noise-free program.
struct ShotRng {
    Xoshiro256ss meas;
    Xoshiro256ss noise;

    static ShotRng for_shot(uint64_t seed, uint64_t shot) {
        ShotRng rng;
        bool any_meas = false;
        bool any_noise = false;
        for (int j = 0; j < 4; j++) {
            rng.meas.s[j] = splitmix64_at(seed, shot * 8 + j);
            rng.noise.s[j] = splitmix64_at(seed, shot * 8 + 4 + j);
            any_meas = any_meas || rng.meas.s[j] != 0;
            any_noise = any_noise || rng.noise.s[j] != 0;
        }
        if (!any_meas) {
            rng.meas.s[0] = 1;
        }
        if (!any_noise) {
            rng.noise.s[0] = 1;
        }
        return rng;
    }

    /// Fair bit for a random measurement outcome (one draw).
    int meas_bit() {
        return static_cast<int>(meas.next() >> 63);
    }

    /// Uniform double in [0, 1) for noise triggering/choice (one draw).
    double noise_uniform() {
        return static_cast<double>(noise.next() >> 11) * 0x1.0p-53;
    }
};

}  // namespace hexmatch

#endif

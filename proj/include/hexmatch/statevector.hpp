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

#ifndef HEXMATCH_STATEVECTOR_HPP
#define HEXMATCH_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "hexmatch/circuit.hpp"
#include "hexmatch/rng.hpp"

namespace hexmatch {

/// Dense brute-force simulator used as the cross-validation oracle. Mirrors
/// TableauSim's instruction semantics exactly, including the random draw
/// discipline, so the two engines can be compared draw for draw.
class StateVectorSim {
  public:
    static constexpr uint32_t kMaxQubits = 12;

    explicit StateVectorSim(uint32_t num_qubits);

    uint32_t num_qubits() const {
        return n_;
    }

    void do_h(uint32_t q);
    void do_s(uint32_t q);
    void do_sdag(uint32_t q);
    void do_cx(uint32_t control, uint32_t target);
    void do_x(uint32_t q);
    void do_y(uint32_t q);
    void do_z(uint32_t q);

    /// Probability of outcome 1 when measuring Z on qubit q.
    double prob_one(uint32_t q) const;

    int do_measure_z(uint32_t q, ShotRng &rng);
    void do_reset(uint32_t q, ShotRng &rng);

    std::optional<int> apply(const Instruction &inst, ShotRng &rng);

    const std::vector<std::complex<double>> &amplitudes() const {
        return amps_;
    }

  private:
    uint32_t n_ = 0;
    std::vector<std::complex<double>> amps_;

    void project(uint32_t q, int outcome, double prob);
    void bounds_check(uint32_t q) const;
};

}  // namespace hexmatch

#endif

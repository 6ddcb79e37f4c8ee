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

#ifndef HEXMATCH_TABLEAU_HPP
#define HEXMATCH_TABLEAU_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hexmatch/circuit.hpp"
#include "hexmatch/pauli.hpp"
#include "hexmatch/rng.hpp"

namespace hexmatch {

/// Stabilizer tableau simulator (Aaronson-Gottesman style): 2n generator rows
/// (destabilizers 0..n-1, stabilizers n..2n-1) over n qubits.
///
/// Storage is column major: for each qubit there is one bit vector over the
/// 2n rows for the X part and one for the Z part, so Clifford gates are a few
/// word operations per row-word instead of a loop over rows. Measurements use
/// word-parallel phase accumulation (a bit-sliced mod-4 counter for the
/// random branch, a per-column product-phase formula for the deterministic
/// branch).
class TableauSim {
  public:
    explicit TableauSim(uint32_t num_qubits);

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

    /// True when Z_q is (up to sign) in the stabilizer group.
    bool z_deterministic(uint32_t q) const;

    int do_measure_z(uint32_t q, ShotRng &rng);
    void do_reset(uint32_t q, ShotRng &rng);

    /// Executes one instruction; returns the outcome for MeasureZ.
    std::optional<int> apply(const Instruction &inst, ShotRng &rng);

    /// Generator row as a symbolic Pauli (row < n: destabilizer; else
    /// stabilizer row - n). Test/debug use.
    PauliString row(uint32_t r) const;

    /// Verifies commutation structure and full rank of the tableau; throws
    /// std::logic_error on violation. Test/debug use (O(n^3)).
    void check_invariants() const;

  private:
    uint32_t n_ = 0;
    size_t row_words_ = 0;  // words per 2n-row bit vector

    // xs_[q * row_words_ + w], likewise zs_; signs_ is one bit vector.
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint64_t> signs_;
    std::vector<uint64_t> stab_half_;  // mask of rows n..2n-1

    // scratch for measurement (pivot row and bit-sliced phase counters)
    std::vector<uint8_t> pivot_x_;
    std::vector<uint8_t> pivot_z_;
    std::vector<uint64_t> phase_lo_;
    std::vector<uint64_t> phase_hi_;
    std::vector<uint64_t> update_mask_;

    uint64_t *xcol(uint32_t q) {
        return xs_.data() + static_cast<size_t>(q) * row_words_;
    }
    uint64_t *zcol(uint32_t q) {
        return zs_.data() + static_cast<size_t>(q) * row_words_;
    }
    const uint64_t *xcol(uint32_t q) const {
        return xs_.data() + static_cast<size_t>(q) * row_words_;
    }
    const uint64_t *zcol(uint32_t q) const {
        return zs_.data() + static_cast<size_t>(q) * row_words_;
    }

    bool get_bit(const uint64_t *col, uint32_t r) const {
        return (col[r >> 6] >> (r & 63)) & 1;
    }

    int deterministic_outcome(uint32_t q) const;
    int random_outcome(uint32_t q, ShotRng &rng);
    void bounds_check(uint32_t q) const;
};

}  // namespace hexmatch

#endif

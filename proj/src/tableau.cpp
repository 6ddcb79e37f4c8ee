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

#include "hexmatch/tableau.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hexmatch {

namespace {

/// Exclusive prefix parity of each bit position within one word, given the
/// parity carried in from lower words (0 or ~0).
inline uint64_t exclusive_prefix_parity(uint64_t v, uint64_t carry_broadcast) {
    uint64_t e = v;
    e ^= e << 1;
    e ^= e << 2;
    e ^= e << 4;
    e ^= e << 8;
    e ^= e << 16;
    e ^= e << 32;
    // e now holds inclusive prefix parity; shift makes it exclusive.
    return (e << 1) ^ carry_broadcast;
}

inline int word_parity(uint64_t v) {
    return std::popcount(v) & 1;
}

}  // namespace

TableauSim::TableauSim(uint32_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("TableauSim needs at least one qubit");
    }
    row_words_ = (2 * static_cast<size_t>(n_) + 63) / 64;
    xs_.assign(static_cast<size_t>(n_) * row_words_, 0);
    zs_.assign(static_cast<size_t>(n_) * row_words_, 0);
    signs_.assign(row_words_, 0);
    stab_half_.assign(row_words_, 0);
    for (uint32_t r = n_; r < 2 * n_; r++) {
        stab_half_[r >> 6] |= uint64_t{1} << (r & 63);
    }
    for (uint32_t q = 0; q < n_; q++) {
        xcol(q)[q >> 6] |= uint64_t{1} << (q & 63);                    // destabilizer X_q
        zcol(q)[(n_ + q) >> 6] |= uint64_t{1} << ((n_ + q) & 63);      // stabilizer Z_q
    }
    pivot_x_.assign(n_, 0);
    pivot_z_.assign(n_, 0);
    phase_lo_.assign(row_words_, 0);
    phase_hi_.assign(row_words_, 0);
    update_mask_.assign(row_words_, 0);
}

void TableauSim::bounds_check(uint32_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit index out of range");
    }
}

void TableauSim::do_h(uint32_t q) {
    bounds_check(q);
    uint64_t *x = xcol(q);
    uint64_t *z = zcol(q);
    for (size_t w = 0; w < row_words_; w++) {
        signs_[w] ^= x[w] & z[w];
        uint64_t t = x[w];
        x[w] = z[w];
        z[w] = t;
    }
}

void TableauSim::do_s(uint32_t q) {
    bounds_check(q);
    uint64_t *x = xcol(q);
    uint64_t *z = zcol(q);
    for (size_t w = 0; w < row_words_; w++) {
        signs_[w] ^= x[w] & z[w];
        z[w] ^= x[w];
    }
}

void TableauSim::do_sdag(uint32_t q) {
    bounds_check(q);
    uint64_t *x = xcol(q);
    uint64_t *z = zcol(q);
    for (size_t w = 0; w < row_words_; w++) {
        signs_[w] ^= x[w] & ~z[w];
        z[w] ^= x[w];
    }
}

void TableauSim::do_cx(uint32_t control, uint32_t target) {
    bounds_check(control);
    bounds_check(target);
    if (control == target) {
        throw std::invalid_argument("CX requires distinct qubits");
    }
    uint64_t *xc = xcol(control);
    uint64_t *zc = zcol(control);
    uint64_t *xt = xcol(target);
    uint64_t *zt = zcol(target);
    for (size_t w = 0; w < row_words_; w++) {
        signs_[w] ^= xc[w] & zt[w] & ~(xt[w] ^ zc[w]);
        xt[w] ^= xc[w];
        zc[w] ^= zt[w];
    }
}

void TableauSim::do_x(uint32_t q) {
    bounds_check(q);
    const uint64_t *z = zcol(q);
    for (size_t w = 0; w < row_words_; w++) {
        signs_[w] ^= z[w];
    }
}

void TableauSim::do_z(uint32_t q) {
    bounds_check(q);
    const uint64_t *x = xcol(q);
    for (size_t w = 0; w < row_words_; w++) {
        signs_[w] ^= x[w];
    }
}

void TableauSim::do_y(uint32_t q) {
    bounds_check(q);
    const uint64_t *x = xcol(q);
    const uint64_t *z = zcol(q);
    for (size_t w = 0; w < row_words_; w++) {
        signs_[w] ^= x[w] ^ z[w];
    }
}

bool TableauSim::z_deterministic(uint32_t q) const {
    const uint64_t *x = xcol(q);
    for (size_t w = 0; w < row_words_; w++) {
        if (x[w] & stab_half_[w]) {
            return false;
        }
    }
    return true;
}

int TableauSim::deterministic_outcome(uint32_t q) const {
    // Z_q equals the product of the stabilizer rows paired with the
    // destabilizer rows that have an X at column q. The outcome is the sign
    // of that product, accumulated column by column:
    //   product of P(x_i, z_i) down one column (row order) is
    //   i^E P(sum x, sum z) with E = #(x&z) + 2*edges(z before x) - XZ of the sums.
    const uint64_t *xq = xcol(q);

    // Mask of stabilizer rows to multiply: destabilizer bits shifted up by n.
    std::vector<uint64_t> mask(row_words_, 0);
    size_t word_shift = n_ >> 6;
    uint32_t bit_shift = n_ & 63;
    for (size_t w = 0; w + word_shift < row_words_; w++) {
        uint64_t v = xq[w] & ~stab_half_[w];  // destabilizer half only
        mask[w + word_shift] |= v << bit_shift;
        if (bit_shift != 0 && w + word_shift + 1 < row_words_) {
            mask[w + word_shift + 1] |= v >> (64 - bit_shift);
        }
    }

    uint32_t total = 0;  // phase exponent of i, mod 4
    for (size_t w = 0; w < row_words_; w++) {
        total += 2 * word_parity(signs_[w] & mask[w]);
    }
    for (uint32_t c = 0; c < n_; c++) {
        const uint64_t *x = xcol(c);
        const uint64_t *z = zcol(c);
        uint32_t cnt_xz = 0;
        int sum_x = 0;
        int sum_z = 0;
        int pair_parity = 0;
        uint64_t carry = 0;
        for (size_t w = 0; w < row_words_; w++) {
            uint64_t sx = x[w] & mask[w];
            uint64_t sz = z[w] & mask[w];
            cnt_xz += std::popcount(sx & sz);
            sum_x ^= word_parity(sx);
            sum_z ^= word_parity(sz);
            uint64_t ex = exclusive_prefix_parity(sz, carry);
            pair_parity ^= word_parity(ex & sx);
            carry = word_parity(sz) ? ~carry : carry;
        }
        total += cnt_xz + 2 * pair_parity + 3 * (sum_x & sum_z);
    }
    return (total >> 1) & 1;
}

int TableauSim::random_outcome(uint32_t q, ShotRng &rng) {
    const uint64_t *xq = xcol(q);

    // Lowest stabilizer row with an X at column q becomes the pivot.
    uint32_t pivot = 0;
    for (size_t w = 0;; w++) {
        uint64_t v = xq[w] & stab_half_[w];
        if (v) {
            pivot = static_cast<uint32_t>(w * 64 + std::countr_zero(v));
            break;
        }
    }

    for (size_t w = 0; w < row_words_; w++) {
        update_mask_[w] = xq[w];
        phase_lo_[w] = 0;
        phase_hi_[w] = 0;
    }
    update_mask_[pivot >> 6] &= ~(uint64_t{1} << (pivot & 63));

    for (uint32_t c = 0; c < n_; c++) {
        pivot_x_[c] = get_bit(xcol(c), pivot);
        pivot_z_[c] = get_bit(zcol(c), pivot);
    }

    // Multiply the pivot row into every other row with an X at column q,
    // accumulating each row's phase exponent in a bit-sliced mod-4 counter.
    for (uint32_t c = 0; c < n_; c++) {
        bool px = pivot_x_[c];
        bool pz = pivot_z_[c];
        if (!px && !pz) {
            continue;
        }
        uint64_t *x = xcol(c);
        uint64_t *z = zcol(c);
        for (size_t w = 0; w < row_words_; w++) {
            uint64_t m = update_mask_[w];
            uint64_t xw = x[w];
            uint64_t zw = z[w];
            uint64_t plus;
            uint64_t minus;
            if (px && !pz) {  // pivot X: +i against Y rows, -i against Z rows
                plus = xw & zw;
                minus = ~xw & zw;
            } else if (px && pz) {  // pivot Y: +i against Z rows, -i against X rows
                plus = zw & ~xw;
                minus = xw & ~zw;
            } else {  // pivot Z: +i against X rows, -i against Y rows
                plus = xw & ~zw;
                minus = xw & zw;
            }
            plus &= m;
            minus &= m;
            phase_hi_[w] ^= phase_lo_[w] & plus;
            phase_lo_[w] ^= plus;
            phase_hi_[w] ^= ~phase_lo_[w] & minus;
            phase_lo_[w] ^= minus;
            if (px) {
                x[w] = xw ^ m;
            }
            if (pz) {
                z[w] = zw ^ m;
            }
        }
    }

    bool pivot_sign = get_bit(signs_.data(), pivot);
    for (size_t w = 0; w < row_words_; w++) {
        uint64_t m = update_mask_[w];
        signs_[w] ^= phase_hi_[w] & m;
        if (pivot_sign) {
            signs_[w] ^= m;
        }
    }

    // Old pivot row becomes its paired destabilizer; pivot row becomes Z_q
    // with a fresh random sign.
    uint32_t dest = pivot - n_;
    uint64_t dest_mask = uint64_t{1} << (dest & 63);
    uint64_t pivot_mask = uint64_t{1} << (pivot & 63);
    for (uint32_t c = 0; c < n_; c++) {
        uint64_t *x = xcol(c);
        uint64_t *z = zcol(c);
        x[dest >> 6] = (x[dest >> 6] & ~dest_mask) | (pivot_x_[c] ? dest_mask : 0);
        z[dest >> 6] = (z[dest >> 6] & ~dest_mask) | (pivot_z_[c] ? dest_mask : 0);
        x[pivot >> 6] &= ~pivot_mask;
        z[pivot >> 6] &= ~pivot_mask;
    }
    zcol(q)[pivot >> 6] |= pivot_mask;

    signs_[dest >> 6] = (signs_[dest >> 6] & ~dest_mask) | (pivot_sign ? dest_mask : 0);
    int outcome = rng.meas_bit();
    signs_[pivot >> 6] = (signs_[pivot >> 6] & ~pivot_mask) | (outcome ? pivot_mask : 0);
    return outcome;
}

int TableauSim::do_measure_z(uint32_t q, ShotRng &rng) {
    bounds_check(q);
    if (z_deterministic(q)) {
        return deterministic_outcome(q);
    }
    return random_outcome(q, rng);
}

void TableauSim::do_reset(uint32_t q, ShotRng &rng) {
    if (do_measure_z(q, rng) == 1) {
        do_x(q);
    }
}

std::optional<int> TableauSim::apply(const Instruction &inst, ShotRng &rng) {
    switch (inst.kind) {
        case InstrKind::Reset:
            do_reset(inst.q0, rng);
            return std::nullopt;
        case InstrKind::H:
            do_h(inst.q0);
            return std::nullopt;
        case InstrKind::S:
            do_s(inst.q0);
            return std::nullopt;
        case InstrKind::SDag:
            do_sdag(inst.q0);
            return std::nullopt;
        case InstrKind::CX:
            do_cx(inst.q0, inst.q1);
            return std::nullopt;
        case InstrKind::MeasureZ:
            return do_measure_z(inst.q0, rng);
        case InstrKind::XError: {
            double u = rng.noise_uniform();
            if (u < inst.probability) {
                do_x(inst.q0);
            }
            return std::nullopt;
        }
        case InstrKind::Depolarize2: {
            double trigger = rng.noise_uniform();
            double choice = rng.noise_uniform();
            if (trigger < inst.probability) {
                int k = 1 + std::min(14, static_cast<int>(choice * 15.0));
                int p0 = k >> 2;
                int p1 = k & 3;
                auto apply_pauli = [&](int p, uint32_t qq) {
                    if (p == 1) {
                        do_x(qq);
                    } else if (p == 2) {
                        do_y(qq);
                    } else if (p == 3) {
                        do_z(qq);
                    }
                };
                apply_pauli(p0, inst.q0);
                apply_pauli(p1, inst.q1);
            }
            return std::nullopt;
        }
    }
    throw std::invalid_argument("unknown instruction kind");
}

PauliString TableauSim::row(uint32_t r) const {
    if (r >= 2 * n_) {
        throw std::out_of_range("tableau row out of range");
    }
    PauliString p(n_);
    for (uint32_t c = 0; c < n_; c++) {
        bool xb = get_bit(xcol(c), r);
        bool zb = get_bit(zcol(c), r);
        if (xb && zb) {
            p.set_pauli(c, 'Y');
        } else if (xb) {
            p.set_pauli(c, 'X');
        } else if (zb) {
            p.set_pauli(c, 'Z');
        }
    }
    if (get_bit(signs_.data(), r)) {
        p.phase_i = (p.phase_i + 2) & 3;
    }
    return p;
}

void TableauSim::check_invariants() const {
    std::vector<PauliString> rows;
    rows.reserve(2 * n_);
    for (uint32_t r = 0; r < 2 * n_; r++) {
        rows.push_back(row(r));
    }
    for (uint32_t i = 0; i < 2 * n_; i++) {
        for (uint32_t j = i + 1; j < 2 * n_; j++) {
            bool commute = rows[i].commutes_with(rows[j]);
            bool expect_commute = j != i + n_;  // destabilizer i anticommutes only with stabilizer i
            if (commute != expect_commute) {
                throw std::logic_error("tableau commutation structure violated");
            }
        }
    }
    // Rank of the 2n x 2n symplectic bit matrix must be 2n.
    std::vector<std::vector<uint64_t>> mat;
    size_t words = (2 * static_cast<size_t>(n_) + 63) / 64;
    for (uint32_t r = 0; r < 2 * n_; r++) {
        std::vector<uint64_t> bits(words, 0);
        for (uint32_t c = 0; c < n_; c++) {
            if (rows[r].x_bit(c)) {
                bits[c >> 6] |= uint64_t{1} << (c & 63);
            }
            if (rows[r].z_bit(c)) {
                bits[(n_ + c) >> 6] |= uint64_t{1} << ((n_ + c) & 63);
            }
        }
        mat.push_back(std::move(bits));
    }
    uint32_t rank = 0;
    for (uint32_t col = 0; col < 2 * n_; col++) {
        uint32_t pivot = rank;
        while (pivot < 2 * n_ && !((mat[pivot][col >> 6] >> (col & 63)) & 1)) {
            pivot++;
        }
        if (pivot == 2 * n_) {
            continue;
        }
        std::swap(mat[rank], mat[pivot]);
        for (uint32_t r = 0; r < 2 * n_; r++) {
            if (r != rank && ((mat[r][col >> 6] >> (col & 63)) & 1)) {
                for (size_t w = 0; w < words; w++) {
                    mat[r][w] ^= mat[rank][w];
                }
            }
        }
        rank++;
    }
    if (rank != 2 * n_) {
        throw std::logic_error("tableau rows are not full rank");
    }
}

}  // namespace hexmatch

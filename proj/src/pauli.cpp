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

#include "hexmatch/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace hexmatch {

namespace {
constexpr size_t words_for(uint32_t n) {
    return (static_cast<size_t>(n) + 63) / 64;
}
}  // namespace

PauliString::PauliString(uint32_t n) : num_qubits(n), x(words_for(n), 0), z(words_for(n), 0) {
}

bool PauliString::x_bit(uint32_t q) const {
    return (x[q >> 6] >> (q & 63)) & 1;
}

bool PauliString::z_bit(uint32_t q) const {
    return (z[q >> 6] >> (q & 63)) & 1;
}

char PauliString::pauli_at(uint32_t q) const {
    bool xb = x_bit(q);
    bool zb = z_bit(q);
    if (xb && zb) {
        return 'Y';
    }
    if (xb) {
        return 'X';
    }
    if (zb) {
        return 'Z';
    }
    return 'I';
}

void PauliString::set_pauli(uint32_t q, char p) {
    if (q >= num_qubits) {
        throw std::out_of_range("PauliString::set_pauli: qubit out of range");
    }
    // Remove the current Pauli, including its phase convention for Y.
    if (pauli_at(q) == 'Y') {
        phase_i = (phase_i + 3) & 3;
    }
    uint64_t mask = uint64_t{1} << (q & 63);
    x[q >> 6] &= ~mask;
    z[q >> 6] &= ~mask;
    switch (p) {
        case 'I':
            break;
        case 'X':
            x[q >> 6] |= mask;
            break;
        case 'Z':
            z[q >> 6] |= mask;
            break;
        case 'Y':
            x[q >> 6] |= mask;
            z[q >> 6] |= mask;
            phase_i = (phase_i + 1) & 3;
            break;
        default:
            throw std::invalid_argument("PauliString::set_pauli: expected one of I, X, Y, Z");
    }
}

void PauliString::mul(const PauliString &other) {
    if (other.num_qubits != num_qubits) {
        throw std::invalid_argument("PauliString::mul: size mismatch");
    }
    // (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^(z1 & x2) X^(x1^x2) Z^(z1^z2)
    size_t swaps = 0;
    for (size_t w = 0; w < x.size(); w++) {
        swaps += std::popcount(z[w] & other.x[w]);
        x[w] ^= other.x[w];
        z[w] ^= other.z[w];
    }
    phase_i = (phase_i + other.phase_i + 2 * (swaps & 1)) & 3;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.num_qubits != num_qubits) {
        throw std::invalid_argument("PauliString::commutes_with: size mismatch");
    }
    size_t t = 0;
    for (size_t w = 0; w < x.size(); w++) {
        t += std::popcount(x[w] & other.z[w]);
        t += std::popcount(z[w] & other.x[w]);
    }
    return (t & 1) == 0;
}

bool PauliString::is_identity() const {
    for (size_t w = 0; w < x.size(); w++) {
        if (x[w] || z[w]) {
            return false;
        }
    }
    return true;
}

bool PauliString::operator==(const PauliString &other) const {
    return num_qubits == other.num_qubits && phase_i == other.phase_i && x == other.x && z == other.z;
}

std::string PauliString::str() const {
    static const char *prefixes[] = {"+", "+i", "-", "-i"};
    // Display phase relative to the conventional sigma products, so that e.g.
    // the stored i*XZ prints as "+Y".
    size_t ys = 0;
    for (size_t w = 0; w < x.size(); w++) {
        ys += std::popcount(x[w] & z[w]);
    }
    std::string out = prefixes[(phase_i + 4 - (ys & 3)) & 3];
    for (uint32_t q = 0; q < num_qubits; q++) {
        char c = pauli_at(q);
        out.push_back(c == 'I' ? '_' : c);
    }
    return out;
}

}  // namespace hexmatch

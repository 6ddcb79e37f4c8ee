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

#ifndef HEXMATCH_PAULI_HPP
#define HEXMATCH_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hexmatch {

/// Phase-exact n-qubit Pauli operator, stored as i^phase_i * prod_q X^x_q Z^z_q.
///
/// Y on qubit q is represented as x_q = z_q = 1 together with a +1 contribution
/// to phase_i (Y = i X Z). Used for the symbolic identities of the lattice
/// module (group products, commutation checks); not a performance type.
struct PauliString {
    uint32_t num_qubits = 0;
    std::vector<uint64_t> x;
    std::vector<uint64_t> z;
    uint8_t phase_i = 0;  // exponent of i, mod 4

    explicit PauliString(uint32_t num_qubits);

    bool x_bit(uint32_t q) const;
    bool z_bit(uint32_t q) const;
    /// One of 'I', 'X', 'Y', 'Z' (phase bookkeeping not included).
    char pauli_at(uint32_t q) const;
    /// Overwrites qubit q with the given Pauli, adjusting phase_i so that the
    /// stored operator is exactly sigma^p on that qubit.
    void set_pauli(uint32_t q, char p);

    /// this := this * other (operator product, left factor first).
    void mul(const PauliString &other);

    bool commutes_with(const PauliString &other) const;
    bool is_identity() const;

    bool operator==(const PauliString &other) const;

    /// e.g. "+XZ_Y" / "-i..." with one character per qubit.
    std::string str() const;
};

}  // namespace hexmatch

#endif

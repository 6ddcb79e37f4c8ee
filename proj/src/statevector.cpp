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

#include "hexmatch/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexmatch {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
// Stabilizer states have Z-measurement probabilities of exactly 0, 1/2 or 1;
// this threshold only absorbs floating point drift.
constexpr double kDetEps = 1e-9;
}  // namespace

StateVectorSim::StateVectorSim(uint32_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVectorSim supports 1 to 12 qubits");
    }
    amps_.assign(size_t{1} << n_, 0.0);
    amps_[0] = 1.0;
}

void StateVectorSim::bounds_check(uint32_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit index out of range");
    }
}

void StateVectorSim::do_h(uint32_t q) {
    bounds_check(q);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            continue;
        }
        auto a = amps_[i];
        auto b = amps_[i | bit];
        amps_[i] = (a + b) * kInvSqrt2;
        amps_[i | bit] = (a - b) * kInvSqrt2;
    }
}

void StateVectorSim::do_s(uint32_t q) {
    bounds_check(q);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            amps_[i] *= std::complex<double>(0.0, 1.0);
        }
    }
}

void StateVectorSim::do_sdag(uint32_t q) {
    bounds_check(q);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            amps_[i] *= std::complex<double>(0.0, -1.0);
        }
    }
}

void StateVectorSim::do_cx(uint32_t control, uint32_t target) {
    bounds_check(control);
    bounds_check(target);
    if (control == target) {
        throw std::invalid_argument("CX requires distinct qubits");
    }
    size_t cbit = size_t{1} << control;
    size_t tbit = size_t{1} << target;
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void StateVectorSim::do_x(uint32_t q) {
    bounds_check(q);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) {
            std::swap(amps_[i], amps_[i | bit]);
        }
    }
}

void StateVectorSim::do_y(uint32_t q) {
    bounds_check(q);
    size_t bit = size_t{1} << q;
    const std::complex<double> plus_i(0.0, 1.0);
    const std::complex<double> minus_i(0.0, -1.0);
    for (size_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) {
            auto a0 = amps_[i];
            auto a1 = amps_[i | bit];
            amps_[i] = minus_i * a1;
            amps_[i | bit] = plus_i * a0;
        }
    }
}

void StateVectorSim::do_z(uint32_t q) {
    bounds_check(q);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            amps_[i] = -amps_[i];
        }
    }
}

double StateVectorSim::prob_one(uint32_t q) const {
    size_t bit = size_t{1} << q;
    double p = 0.0;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

void StateVectorSim::project(uint32_t q, int outcome, double prob) {
    size_t bit = size_t{1} << q;
    double scale = 1.0 / std::sqrt(prob);
    for (size_t i = 0; i < amps_.size(); i++) {
        bool one = (i & bit) != 0;
        if (one == (outcome == 1)) {
            amps_[i] *= scale;
        } else {
            amps_[i] = 0.0;
        }
    }
}

int StateVectorSim::do_measure_z(uint32_t q, ShotRng &rng) {
    bounds_check(q);
    double p1 = prob_one(q);
    if (p1 < kDetEps) {
        project(q, 0, 1.0 - p1);
        return 0;
    }
    if (p1 > 1.0 - kDetEps) {
        project(q, 1, p1);
        return 1;
    }
    // Clifford programs only ever reach here with p1 == 1/2, so a fair bit
    // matches the tableau engine draw for draw.
    int outcome = rng.meas_bit();
    project(q, outcome, outcome ? p1 : 1.0 - p1);
    return outcome;
}

void StateVectorSim::do_reset(uint32_t q, ShotRng &rng) {
    if (do_measure_z(q, rng) == 1) {
        do_x(q);
    }
}

std::optional<int> StateVectorSim::apply(const Instruction &inst, ShotRng &rng) {
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

}  // namespace hexmatch

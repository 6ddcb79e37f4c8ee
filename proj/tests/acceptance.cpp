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

// End-to-end acceptance suite. Each test prints one pass/fail line with the
// measured values; thresholds are fixed here, not tuned at runtime.

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "hexmatch/analysis.hpp"
#include "hexmatch/calibration.hpp"
#include "hexmatch/code.hpp"
#include "hexmatch/noise.hpp"
#include "hexmatch/runner.hpp"
#include "test_util.hpp"

using namespace hexmatch;
using hexmatch_tests::random_program;

namespace {

constexpr uint64_t kSeed = 20260810;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, bool pass, const char *fmt, ...) {
    char detail[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(detail, sizeof detail, fmt, args);
    va_end(args);
    std::printf("criterion %d: %s  (%s)\n", criterion, pass ? "PASS" : "FAIL", detail);
    std::fflush(stdout);
}

struct SweepResult {
    std::vector<SweepPoint> points;
    double seconds = 0;
};

/// The criterion-3 sweep (falcon-27, T=3, 2e4 shots per point), shared with
/// criterion 10's timing check.
const SweepResult &ordering_sweep() {
    static const SweepResult result = [] {
        CodeSpec code = build_code(build_heavy_hex_layout("falcon-27"));
        auto start = std::chrono::steady_clock::now();
        SweepResult r;
        r.points = run_noise_sweep(code, 3, 20000, kSeed, {0.005, 0.01, 0.02, 0.03});
        r.seconds = seconds_since(start);
        return r;
    }();
    return result;
}

ExperimentStats falcon_point(double p, uint64_t shots) {
    CodeSpec code = build_code(build_heavy_hex_layout("falcon-27"));
    auto points = run_noise_sweep(code, 3, shots, kSeed, {p});
    return points[0].stats;
}

}  // namespace

TEST(acceptance, criterion1_noiseless_invariance) {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    double values[4] = {0, 0, 0, 0};
    int i = 0;
    for (const char *name : {"falcon-27", "hummingbird-65"}) {
        CodeSpec code = build_code(build_heavy_hex_layout(name));
        CircuitProgram noisy = apply_noise_model(build_experiment(code, 3), NoiseModel{0.0});
        ShotTable table = run_shots(noisy, 1000, kSeed);
        ExperimentStats stats = compute_stats(table, noisy, code);
        values[i++] = stats.mean_pW;
        values[i++] = stats.mean_pZ;
        pass = pass && stats.mean_pW == 0.0 && stats.mean_pZ == 0.0;
    }
    double elapsed = seconds_since(start);
    pass = pass && elapsed < 10.0;
    report(1, pass,
           "falcon pW=%g pZ=%g, hummingbird pW=%g pZ=%g, need exact 0; %.2fs < 10s", values[0],
           values[1], values[2], values[3], elapsed);
    EXPECT_EQ(values[0], 0.0);
    EXPECT_EQ(values[1], 0.0);
    EXPECT_EQ(values[2], 0.0);
    EXPECT_EQ(values[3], 0.0);
    EXPECT_LT(elapsed, 10.0);
}

TEST(acceptance, criterion2_convergence_at_strong_noise) {
    ExperimentStats stats = falcon_point(0.10, 20000);
    bool pass = std::abs(stats.mean_pW - 0.5) <= 0.02 && std::abs(stats.mean_pZ - 0.5) <= 0.02;
    report(2, pass, "p=0.10: pW=%.4f pZ=%.4f, need both within 0.02 of 0.5", stats.mean_pW,
           stats.mean_pZ);
    EXPECT_NEAR(stats.mean_pW, 0.5, 0.02);
    EXPECT_NEAR(stats.mean_pZ, 0.5, 0.02);
}

TEST(acceptance, criterion3_pw_above_pz_across_sweep) {
    const auto &sweep = ordering_sweep();
    bool pass = true;
    std::string detail;
    char buf[96];
    for (const auto &pt : sweep.points) {
        pass = pass && pt.stats.mean_pW > pt.stats.mean_pZ;
        std::snprintf(buf, sizeof buf, "p=%g: pW=%.4f pZ=%.4f; ", pt.p, pt.stats.mean_pW,
                      pt.stats.mean_pZ);
        detail += buf;
    }
    report(3, pass, "%sneed pW > pZ at every point", detail.c_str());
    for (const auto &pt : sweep.points) {
        EXPECT_GT(pt.stats.mean_pW, pt.stats.mean_pZ) << "p = " << pt.p;
    }
}

TEST(acceptance, criterion4_pw_near_convergence_at_1p5_percent) {
    ExperimentStats stats = falcon_point(0.015, 20000);
    bool pass = stats.mean_pW >= 0.45;
    report(4, pass, "p=0.015: pW=%.4f, need >= 0.45", stats.mean_pW);
    EXPECT_GE(stats.mean_pW, 0.45);
}

TEST(acceptance, criterion5_pz_distinguishable) {
    ExperimentStats at_15 = falcon_point(0.015, 20000);
    const auto &sweep = ordering_sweep();
    const SweepPoint *at_30 = nullptr;
    for (const auto &pt : sweep.points) {
        if (pt.p == 0.03) {
            at_30 = &pt;
        }
    }
    ASSERT_NE(at_30, nullptr);
    double bound_30 = 0.5 - 3.0 * at_30->stats.stderr_pZ;
    bool pass = at_15.mean_pZ <= 0.45 && at_30->stats.mean_pZ < bound_30;
    report(5, pass, "p=0.015: pZ=%.4f (need <= 0.45); p=0.03: pZ=%.4f (need < %.4f)", at_15.mean_pZ,
           at_30->stats.mean_pZ, bound_30);
    EXPECT_LE(at_15.mean_pZ, 0.45);
    EXPECT_LT(at_30->stats.mean_pZ, bound_30);
}

TEST(acceptance, criterion6_algebraic_identities) {
    bool pass = true;
    int plaquettes_checked = 0;
    for (const char *name : {"falcon-27", "hummingbird-65"}) {
        CodeSpec code = build_code(build_heavy_hex_layout(name));
        uint32_t n = static_cast<uint32_t>(code.layout.num_qubits());
        for (const auto &p : code.plaquettes) {
            PauliString va = group_operator(code, p.group_a);
            PauliString vb = group_operator(code, p.group_b);
            PauliString w = plaquette_operator(p, n);
            PauliString product = va;
            product.mul(vb);
            bool ok = product == w && va.commutes_with(w) && vb.commutes_with(w) &&
                      va.commutes_with(vb);
            for (uint32_t id : p.boundary_links) {
                PauliString l = link_operator(code.links[id], n);
                ok = ok && va.commutes_with(l) && vb.commutes_with(l);
            }
            EXPECT_TRUE(ok) << name << " plaquette " << p.id;
            pass = pass && ok;
            plaquettes_checked++;
        }
    }
    report(6, pass, "Va*Vb = W and commutation points verified exactly on %d plaquettes",
           plaquettes_checked);
    EXPECT_TRUE(pass);
}

TEST(acceptance, criterion7_engine_equivalence) {
    std::mt19937 gen(20261);
    const uint64_t shots = 100000;
    int programs = 50;
    double worst_z = 0.0;
    bool pass = true;
    for (int k = 0; k < programs; k++) {
        uint32_t qubits = 2 + static_cast<uint32_t>(k % 7);
        CircuitProgram program = random_program(gen, qubits, 20, 0.05);
        ShotTable a = run_shots(program, shots, kSeed + k);
        ShotTable b = run_shots_statevector(program, shots, kSeed + k);
        for (uint32_t bit = 0; bit < program.num_bits; bit++) {
            uint64_t ca = 0;
            uint64_t cb = 0;
            for (uint64_t s = 0; s < shots; s++) {
                ca += a.get(s, bit);
                cb += b.get(s, bit);
            }
            double fa = static_cast<double>(ca) / shots;
            double fb = static_cast<double>(cb) / shots;
            double se = std::sqrt(fa * (1 - fa) / shots + fb * (1 - fb) / shots);
            double diff = std::abs(fa - fb);
            if (se == 0.0) {
                pass = pass && diff == 0.0;
            } else {
                worst_z = std::max(worst_z, diff / se);
                pass = pass && diff <= 3.0 * se;
            }
            EXPECT_TRUE(se == 0.0 ? diff == 0.0 : diff <= 3.0 * se)
                << "program " << k << " bit " << bit;
        }
    }
    report(7, pass, "%d programs at %llu shots; worst marginal deviation %.2f se (limit 3)",
           programs, static_cast<unsigned long long>(shots), worst_z);
    EXPECT_TRUE(pass);
}

TEST(acceptance, criterion8_idle_error_formula) {
    struct Case {
        double p_id, t_meas, t_reset, t_id, expected;
    };
    long double direct = 1.0L;
    for (int i = 0; i < 10; i++) {
        direct *= 1.0L - 0.002L;
    }
    const Case cases[] = {
        {0.0, 100, 200, 50, 0.0},
        {0.01, 30, 70, 100, 0.02},
        {0.001, 600, 400, 100, static_cast<double>(1.0L - direct)},
    };
    bool pass = true;
    for (const auto &c : cases) {
        double got = idle_error_probability(c.p_id, c.t_meas, c.t_reset, c.t_id);
        double tol = c.expected == 0.0 ? 0.0 : 1e-12 * std::abs(c.expected);
        pass = pass && std::abs(got - c.expected) <= tol;
        EXPECT_NEAR(got, c.expected, tol);
    }
    report(8, pass, "three fixed cases at relative error 1e-12");
    EXPECT_TRUE(pass);
}

TEST(acceptance, criterion9_group_measurements_per_round) {
    struct Case {
        const char *name;
        uint32_t expected;
    };
    bool pass = true;
    uint32_t got[2] = {0, 0};
    int i = 0;
    for (const Case &c : {Case{"falcon-27", 4}, Case{"hummingbird-65", 16}}) {
        CodeSpec code = build_code(build_heavy_hex_layout(c.name));
        CircuitProgram program = build_experiment(code, 3);
        uint32_t round0_link_bits = 0;
        for (const auto &ctx : program.meas_map) {
            if (ctx.phase == MeasPhase::PlaquetteGroup && ctx.round == 0) {
                round0_link_bits++;
            }
        }
        got[i] = round0_link_bits / 3;  // three link gadgets per group measurement
        pass = pass && got[i] == c.expected;
        i++;
    }
    report(9, pass, "group measurements per round: falcon %u (need 4), hummingbird %u (need 16)",
           got[0], got[1]);
    EXPECT_EQ(got[0], 4u);
    EXPECT_EQ(got[1], 16u);
}

TEST(acceptance, criterion10_sweep_runtime) {
    const auto &sweep = ordering_sweep();
    bool pass = sweep.seconds < 60.0;
    report(10, pass, "criterion-3 sweep took %.2fs, need < 60s", sweep.seconds);
    EXPECT_LT(sweep.seconds, 60.0);
}

// Copyright 2026 The povmcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace povmcoh {
namespace {

using testing::computational;
using testing::plus_minus;

// Reference values from an independent conic solver
// (tests/oracles/robustness_oracle.py).
constexpr double kQutritGamma0 = 0.532664998;
constexpr double kQutritGamma025 = 0.495444564;
constexpr double kQutritGamma05 = 0.466385455;
constexpr double kQutritGamma09 = 0.270532963;
constexpr double kFourierQutrit = 2.0;

Povm fourier_qutrit() {
    std::vector<HermitianMatrix> c;
    for (int k = 0; k < 3; ++k) {
        std::vector<Complex> v;
        for (int j = 0; j < 3; ++j) {
            v.push_back(std::polar(1.0 / std::sqrt(3.0), 2.0 * std::numbers::pi * k * j / 3.0));
        }
        c.push_back(HermitianMatrix::projector(v));
    }
    return Povm(std::move(c));
}

void expect_certified(const Povm &p, const SdpSolution &s, double tol) {
    EXPECT_EQ(s.status, SdpStatus::optimal);
    EXPECT_LE(s.duality_gap, tol);
    EXPECT_LE(s.dual_value, s.value + 1e-12);
    EXPECT_LE(primal_infeasibility(p, s.primal_diagonals), 1e-9);
    EXPECT_LE(dual_infeasibility(s.dual_matrices, s.sigma), 1e-9);
    EXPECT_NEAR(dual_objective(p, s.dual_matrices), s.dual_value, 1e-9);
}

TEST(Robustness, IncoherentIsZero) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto p = random_incoherent_povm(2 + s % 3, 3, s);
        const auto sol = robustness(p);
        EXPECT_NEAR(sol.value, 0.0, 1e-7);
        EXPECT_FALSE(sol.mixing_povm.has_value());
        expect_certified(p, sol, 1e-7);
    }
}

TEST(Robustness, QubitDirections) {
    for (int k = 0; k <= 16; ++k) {
        const double t = k * std::numbers::pi / 8.0;
        const auto p = z_theta_phi({t, 0.4 * k});
        const auto sol = robustness(p);
        EXPECT_NEAR(sol.value, std::abs(std::sin(t)), 1e-6);
        expect_certified(p, sol, 1e-7);
    }
}

TEST(Robustness, QutritDichotomicMatchesReference) {
    const auto g = qutrit_dichotomic_povm();
    const std::pair<double, double> cases[] = {
        {0.0, kQutritGamma0}, {0.25, kQutritGamma025}, {0.5, kQutritGamma05}, {0.9, kQutritGamma09}};
    for (const auto &[gamma, ref] : cases) {
        const auto p = dual_apply_nonselective(amplitude_damping(3, gamma), g);
        const auto sol = robustness(p);
        EXPECT_NEAR(sol.value, ref, 1e-6) << gamma;
        expect_certified(p, sol, 1e-7);
    }
}

TEST(Robustness, FourierQutrit) {
    const auto p = fourier_qutrit();
    const auto sol = robustness(p);
    EXPECT_NEAR(sol.value, kFourierQutrit, 1e-6);
    expect_certified(p, sol, 1e-7);
}

TEST(Robustness, MixingPovmRecovered) {
    const auto p = random_povm(3, 3, 5);
    const auto sol = robustness(p);
    ASSERT_TRUE(sol.mixing_povm.has_value());
    EXPECT_TRUE(validate(*sol.mixing_povm, 1e-6).valid);
    // (A + s M) / (1 + s) is incoherent.
    const auto mixed = mix(p, *sol.mixing_povm, 1.0 / (1.0 + sol.value));
    EXPECT_TRUE(is_incoherent(mixed, 1e-9));
}

TEST(Robustness, StatusMaxIterWhenCapped) {
    const auto sol = robustness(random_povm(4, 4, 2), 1e-12, 20);
    EXPECT_EQ(sol.status, SdpStatus::max_iter);
    EXPECT_LE(sol.dual_value, sol.value);
}

TEST(ClosedForm, Examples) {
    EXPECT_NEAR(qubit_robustness_closed_form(plus_minus()), 1.0, 1e-15);
    EXPECT_EQ(qubit_robustness_closed_form(computational(2)), 0.0);
    EXPECT_NEAR(qubit_robustness_closed_form(z_theta_phi({std::numbers::pi / 4, 0.0})), std::sqrt(0.5), 1e-12);
    EXPECT_THROW(qubit_robustness_closed_form(computational(3)), DimensionError);
}

TEST(DualWitness, MatchesLinf) {
    EXPECT_NEAR(dual_witness_from_pair(plus_minus(), 0, 1).objective, 1.0, 1e-12);
    EXPECT_NEAR(dual_witness_from_pair(qutrit_dichotomic_povm(), 0, 1).objective, 0.526, 1e-12);
    EXPECT_THROW(dual_witness_from_pair(plus_minus(), 0, 2), std::out_of_range);
}

TEST(DualWitness, AnyPairBelowValue) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto p = random_povm(4, 3, s);
        const double r = robustness(p).value;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                const auto w = dual_witness_from_pair(p, i, j);
                EXPECT_LE(w.objective, r + 1e-7);
                EXPECT_LE(dual_infeasibility(w.z, w.sigma), 1e-12);
            }
        }
    }
}

TEST(Sandwich, RandomInstances) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const auto p = random_povm(2 + s % 3, 2 + (s / 3) % 3, 300 + s);
        const auto r = sandwich_check(p);
        EXPECT_TRUE(r.ok) << s;
        if (p.dim() == 2) {
            EXPECT_NEAR(r.c_linf, r.robustness, 1e-6);
            EXPECT_NEAR(r.c_l1_half, r.robustness, 1e-6);
        }
    }
}

TEST(Sandwich, StrictForDampedQutrit) {
    const auto g = qutrit_dichotomic_povm();
    for (double gamma : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const auto r = sandwich_check(dual_apply_nonselective(amplitude_damping(3, gamma), g));
        EXPECT_TRUE(r.ok);
        EXPECT_GT(r.robustness, r.c_linf + 1e-3);
        EXPECT_LT(r.robustness, r.c_l1_half - 1e-3);
    }
}

TEST(WeakDuality, PerturbedFeasiblePoints) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 0.1);
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto p = random_povm(3, 3, 700 + s);
        const auto sol = robustness(p);
        // Raising primal diagonals keeps feasibility.
        auto diags = sol.primal_diagonals;
        for (auto &dv : diags) {
            for (auto &x : dv) {
                x += u(rng);
            }
        }
        const double primal = primal_objective(diags);
        // Random dual witnesses from random pairs and random PSD mixtures.
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                EXPECT_LE(dual_witness_from_pair(p, i, j).objective, primal + 1e-12);
            }
        }
        EXPECT_LE(sol.dual_value, primal + 1e-12);
    }
}

TEST(Properties, MonotoneUnderSio) {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const std::size_t d = 2 + s % 3;
        const auto p = random_povm(d, 3, 800 + s);
        const auto c = random_sio_channel(d, 2, 850 + s);
        EXPECT_LE(robustness(dual_apply_nonselective(c, p)).value, robustness(p).value + 2e-7);
    }
}

TEST(Properties, Convex) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto a = random_povm(3, 3, s);
        const auto b = random_povm(3, 3, 100 + s);
        const double l = 0.1 + 0.8 * static_cast<double>(s) / 30.0;
        EXPECT_LE(robustness(mix(a, b, l)).value, l * robustness(a).value + (1 - l) * robustness(b).value + 2e-7);
    }
}

TEST(Properties, SeedIndependent) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto p = random_povm(4, 3, 40 + s);
        const double a = robustness(RobustnessProblem{p, 1e-7, 50000, 0}).value;
        const double b = robustness(RobustnessProblem{p, 1e-7, 50000, 99 + s}).value;
        EXPECT_NEAR(a, b, 2e-7);
    }
}

TEST(Properties, DampingSweepNonincreasing) {
    const auto g = qutrit_dichotomic_povm();
    double prev_r = kInf;
    double prev_l = kInf;
    for (int k = 0; k <= 10; ++k) {
        const auto p = dual_apply_nonselective(amplitude_damping(3, 0.1 * k), g);
        const double r = robustness(p).value;
        const double l = c_linf(p).value;
        EXPECT_LE(r, prev_r + 2e-7);
        EXPECT_LE(l, prev_l + 1e-12);
        EXPECT_LE(l, r + 1e-7);
        EXPECT_LE(r, 0.5 * c_l1(p) + 1e-7);
        prev_r = r;
        prev_l = l;
    }
}

} // namespace
} // namespace povmcoh

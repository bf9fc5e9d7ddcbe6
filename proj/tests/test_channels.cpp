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

using testing::max_diff;
using testing::plus_minus;

TEST(KrausChannel, RejectsIncompleteOperators) {
    EXPECT_THROW(KrausChannel({Matrix::identity(2), Matrix::identity(2)}), ValidationError);
    EXPECT_THROW(KrausChannel({Matrix::identity(2), Matrix(3)}), DimensionError);
}

TEST(ClassifySio, Dephasing) {
    const auto dec = classify_sio(dephasing_channel(3));
    ASSERT_TRUE(dec.has_value());
    for (std::size_t mu = 0; mu < 3; ++mu) {
        EXPECT_EQ(dec->coefficients[mu][mu], Complex(1.0));
        for (std::size_t i = 0; i < 3; ++i) {
            if (i != mu) {
                EXPECT_EQ(dec->coefficients[mu][i], Complex(0.0));
            }
        }
    }
}

TEST(ClassifySio, PlusMinusReadoutIsNotSio) {
    const double h = std::numbers::sqrt2 / 2.0;
    const KrausChannel c({Matrix::outer({1.0, 0.0}, {h, h}), Matrix::outer({0.0, 1.0}, {h, -h})});
    EXPECT_FALSE(classify_sio(c).has_value());
}

TEST(ClassifySio, AmplitudeDampingIsSio) { EXPECT_TRUE(classify_sio(amplitude_damping(3, 0.3)).has_value()); }

TEST(ClassifySio, RoundTripReconstruction) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto c = random_sio_channel(2 + s % 4, 1 + s % 3, s);
        const auto dec = classify_sio(c);
        ASSERT_TRUE(dec.has_value());
        const auto ops = dec->reconstruct();
        for (std::size_t mu = 0; mu < ops.size(); ++mu) {
            EXPECT_LT(max_diff(ops[mu], c[mu]), 1e-12);
        }
        for (std::size_t i = 0; i < c.dim(); ++i) {
            double s2 = 0.0;
            for (const auto &coef : dec->coefficients) {
                s2 += std::norm(coef[i]);
            }
            EXPECT_NEAR(s2, 1.0, 1e-12);
        }
    }
}

TEST(ClassifySio, ZeroColumnsCompletedToPermutation) {
    const auto dec = classify_sio(amplitude_damping(3, 1.0));
    ASSERT_TRUE(dec.has_value());
    for (const auto &perm : dec->permutations) {
        std::vector<bool> seen(3, false);
        for (auto t : perm) {
            ASSERT_LT(t, 3u);
            EXPECT_FALSE(seen[t]);
            seen[t] = true;
        }
    }
}

TEST(DualNonselective, IdentityChannel) {
    const auto p = random_povm(3, 3, 1);
    EXPECT_LT(max_diff(dual_apply_nonselective(identity_channel(3), p), p), 1e-15);
}

TEST(DualNonselective, DephasingEqualsDephaseMeasurement) {
    const auto p = plus_minus();
    const auto q = dual_apply_nonselective(dephasing_channel(2), p);
    EXPECT_LT(max_diff(q, dephase_measurement(p)), 1e-15);
    EXPECT_LT(max_diff(q[0].matrix(), (0.5 * HermitianMatrix::identity(2)).matrix()), 1e-15);
}

TEST(DualNonselective, CounterexampleChannelMakesBothBlocksCoherent) {
    const auto q = dual_apply_nonselective(l1_counterexample_channel(), l1_counterexample_povm());
    for (std::size_t a = 0; a < 2; ++a) {
        const double s = a == 0 ? 0.5 : -0.5;
        Matrix expect(4);
        for (std::size_t i = 0; i < 4; ++i) {
            expect(i, i) = 0.5;
        }
        expect(0, 1) = expect(1, 0) = s;
        expect(2, 3) = expect(3, 2) = s;
        EXPECT_LT(max_diff(q[a].matrix(), expect), 1e-15);
    }
}

TEST(DualNonselective, DimensionMismatch) {
    EXPECT_THROW(dual_apply_nonselective(dephasing_channel(3), plus_minus()), DimensionError);
    EXPECT_THROW(dual_apply_selective(dephasing_channel(3), plus_minus()), DimensionError);
}

TEST(DualSelective, IdentityKeepsOutcomes) {
    const auto p = random_povm(2, 3, 5);
    const auto q = dual_apply_selective(identity_channel(2), p);
    EXPECT_EQ(q.outcomes(), 3u);
    EXPECT_LT(max_diff(q, p), 1e-15);
}

TEST(DualSelective, ShapeAndLabels) {
    const auto q = dual_apply_selective(random_sio_channel(2, 2, 3), plus_minus());
    EXPECT_EQ(q.outcomes(), 4u);
    EXPECT_EQ(selective_labels(2, 2), (std::vector<std::string>{"0:0", "0:1", "1:0", "1:1"}));
}

TEST(DualSelective, MergeMatchesNonselective) {
    const auto g = qutrit_dichotomic_povm();
    const auto c = amplitude_damping(3, 0.4);
    const auto sel = dual_apply_selective(c, g);
    EXPECT_EQ(sel.outcomes(), 6u);
    EXPECT_LT(max_diff(merge_selective(sel, 3), dual_apply_nonselective(c, g)), 1e-12);
}

TEST(AmplitudeDamping, NoDamping) {
    const auto c = amplitude_damping(3, 0.0);
    EXPECT_LT(max_diff(c[0], Matrix::identity(3)), 1e-15);
    EXPECT_EQ(c[1].max_abs(), 0.0);
    EXPECT_EQ(c[2].max_abs(), 0.0);
}

TEST(AmplitudeDamping, FullDamping) {
    const auto c = amplitude_damping(3, 1.0);
    EXPECT_EQ(c[0](0, 0), Complex(1.0));
    EXPECT_EQ(c[0](1, 1), Complex(0.0));
    EXPECT_EQ(c[1](0, 1), Complex(1.0));
    EXPECT_EQ(c[2](0, 2), Complex(1.0));
}

TEST(AmplitudeDamping, HalfDamping) {
    const auto c = amplitude_damping(3, 0.5);
    const double r = std::sqrt(0.5);
    EXPECT_NEAR(c[0](0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(c[0](1, 1).real(), r, 1e-15);
    EXPECT_NEAR(c[0](2, 2).real(), 0.5, 1e-15);
    EXPECT_NEAR(c[1](0, 1).real(), r, 1e-15);
    EXPECT_NEAR(c[1](1, 2).real(), r, 1e-15);
    EXPECT_NEAR(c[2](0, 2).real(), 0.5, 1e-15);
}

TEST(AmplitudeDamping, RateOutOfRange) {
    EXPECT_THROW(amplitude_damping(3, -0.1), ValidationError);
    EXPECT_THROW(amplitude_damping(3, 1.5), ValidationError);
}

TEST(DualAction, PreservesValidityAndIncoherence) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const std::size_t d = 2 + s % 3;
        const auto c = random_sio_channel(d, 1 + s % 3, 77 + s);
        const auto p = random_povm(d, 2 + s % 3, s);
        EXPECT_TRUE(validate(dual_apply_nonselective(c, p), 1e-10).valid);
        EXPECT_TRUE(validate(dual_apply_selective(c, p), 1e-10).valid);
        const auto inc = random_incoherent_povm(d, 3, s);
        EXPECT_TRUE(is_incoherent(dual_apply_nonselective(c, inc), 1e-12));
        EXPECT_TRUE(is_incoherent(dual_apply_selective(c, inc), 1e-12));
        EXPECT_LT(max_diff(merge_selective(dual_apply_selective(c, p), c.size()), dual_apply_nonselective(c, p)),
                  1e-12);
    }
}

} // namespace
} // namespace povmcoh

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
using testing::max_diff;
using testing::plus_minus;

TEST(Validate, ComputationalBasis) {
    const auto r = validate(computational(2));
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.completeness_residual, 0.0);
}

TEST(Validate, PlusMinus) {
    const auto r = validate(plus_minus());
    EXPECT_TRUE(r.valid);
    EXPECT_NEAR(r.psd_margins[0], 0.0, 1e-12);
    EXPECT_NEAR(r.psd_margins[1], 0.0, 1e-12);
}

TEST(Validate, DoubleIdentityIsIncomplete) {
    const Povm p({HermitianMatrix::identity(2), HermitianMatrix::identity(2)});
    const auto r = validate(p);
    EXPECT_FALSE(r.valid);
    EXPECT_DOUBLE_EQ(r.completeness_residual, 1.0);
    EXPECT_THROW(Povm::checked(p.components()), ValidationError);
}

TEST(Validate, NonPsdComponentNamed) {
    const Povm p({HermitianMatrix::diagonal({1.1, 0.5}), HermitianMatrix::diagonal({-0.1, 0.5})});
    try {
        Povm::checked(p.components());
        FAIL() << "expected ValidationError";
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.index(), 1u);
        EXPECT_NEAR(e.magnitude(), 0.1, 1e-12);
    }
}

TEST(Povm, ShapeMismatchRejected) {
    EXPECT_THROW(Povm({HermitianMatrix::identity(2), HermitianMatrix::identity(3)}), DimensionError);
    EXPECT_THROW(Povm(std::vector<HermitianMatrix>{}), DimensionError);
}

TEST(IsIncoherent, Examples) {
    EXPECT_TRUE(is_incoherent(computational(3)));
    EXPECT_FALSE(is_incoherent(plus_minus()));
    EXPECT_TRUE(is_incoherent(dephase_measurement(random_povm(3, 3, 4))));
}

TEST(Dephase, PlusMinusToHalfIdentity) {
    const auto d = dephase_measurement(plus_minus());
    for (std::size_t a = 0; a < 2; ++a) {
        EXPECT_LT(max_diff(d[a].matrix(), (0.5 * HermitianMatrix::identity(2)).matrix()), 1e-15);
    }
}

TEST(Dephase, Idempotent) {
    const auto p = random_incoherent_povm(4, 3, 2);
    EXPECT_EQ(dephase_measurement(p), p);
    const auto q = dephase_measurement(random_povm(3, 2, 8));
    EXPECT_EQ(dephase_measurement(q), q);
}

TEST(Dephase, CounterexamplePovmDiagonal) {
    const auto d = dephase_measurement(l1_counterexample_povm());
    for (std::size_t a = 0; a < 2; ++a) {
        EXPECT_EQ(d[a], HermitianMatrix::diagonal({0.5, 0.5, 0.5, 0.5}));
    }
    EXPECT_TRUE(validate(d).valid);
}

TEST(Born, BasisStateOnPlusMinus) {
    const auto p = born_distribution(plus_minus(), DensityMatrix::basis(2, 0));
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
}

TEST(Born, PlusStateIsDeterministic) {
    const auto p = born_distribution(plus_minus(), DensityMatrix::pure({1.0, 1.0}));
    EXPECT_NEAR(p[0], 1.0, 1e-15);
    EXPECT_NEAR(p[1], 0.0, 1e-15);
}

TEST(Born, DimensionMismatch) {
    EXPECT_THROW(born_distribution(plus_minus(), DensityMatrix::basis(3, 0)), DimensionError);
}

TEST(Born, SumsToOneAndDephasingInvariance) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 2 + t % 3;
        const auto p = random_povm(d, 2 + t % 4, 100 + t);
        const auto rho = random_density_matrix(d, rng);
        const auto dist = born_distribution(p, rho);
        double s = 0.0;
        for (double x : dist.probs) {
            EXPECT_GE(x, 0.0);
            s += x;
        }
        EXPECT_NEAR(s, 1.0, 1e-9);
        // An incoherent measurement cannot tell rho from its dephased version.
        const auto inc = random_incoherent_povm(d, 3, t);
        const auto a = born_distribution(inc, rho);
        const auto b = born_distribution(inc, dephase_state(rho));
        for (std::size_t k = 0; k < a.size(); ++k) {
            EXPECT_NEAR(a[k], b[k], 1e-12);
        }
    }
}

TEST(DensityMatrix, RejectsBadTrace) {
    EXPECT_THROW(DensityMatrix(HermitianMatrix::identity(2)), ValidationError);
    EXPECT_THROW(DensityMatrix(HermitianMatrix::diagonal({1.5, -0.5})), ValidationError);
}

TEST(RandomPovm, ValidAndDeterministic) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto p = random_povm(2 + s % 3, 2 + s % 4, s);
        EXPECT_TRUE(validate(p, 1e-10).valid);
        EXPECT_EQ(p, random_povm(2 + s % 3, 2 + s % 4, s));
    }
}

TEST(Mix, ConvexCombinationStaysValid) {
    const auto p = mix(random_povm(3, 3, 1), random_incoherent_povm(3, 3, 2), 0.3);
    EXPECT_TRUE(validate(p, 1e-10).valid);
}

} // namespace
} // namespace povmcoh

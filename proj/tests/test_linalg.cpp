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
using testing::pauli_x;

TEST(EigMin, Identity) { EXPECT_DOUBLE_EQ(eig_min(HermitianMatrix::identity(2)), 1.0); }

TEST(EigMin, Diagonal) { EXPECT_NEAR(eig_min(HermitianMatrix::diagonal({0.3, 0.7})), 0.3, 1e-15); }

TEST(EigMin, HalfIdentityPlusFlip) {
    const auto m = 0.5 * (HermitianMatrix::identity(2) + pauli_x());
    EXPECT_NEAR(eig_min(m), 0.0, 1e-12);
    EXPECT_NEAR(eig_max(m), 1.0, 1e-12);
}

TEST(EigMin, RejectsNonHermitian) {
    Matrix m(2);
    m(0, 1) = 1.0;
    EXPECT_THROW(HermitianMatrix{m}, ValidationError);
}

TEST(EigMin, RejectsNonFinite) {
    Matrix m(2);
    m(0, 0) = std::nan("");
    EXPECT_THROW(HermitianMatrix{m}, ValidationError);
}

TEST(Eigh, ReconstructsRandomHermitian) {
    std::mt19937_64 rng(3);
    for (std::size_t d : {1u, 2u, 3u, 5u, 8u}) {
        const Matrix g = random_ginibre(d, rng);
        const auto h = HermitianMatrix::hermitian_part(g + g.adjoint());
        const auto es = eigh(h);
        EXPECT_TRUE(std::is_sorted(es.values.begin(), es.values.end()));
        const auto back = spectral_map(es, [](double x) { return x; });
        EXPECT_LT(max_diff(back.matrix(), h.matrix()), 1e-12 * (1.0 + h.max_abs()));
        const Matrix vv = es.vectors.adjoint() * es.vectors;
        EXPECT_LT(max_diff(vv, Matrix::identity(d)), 1e-12);
    }
}

TEST(Eigh, ComplexPhasesHandled) {
    Matrix m(2);
    m(0, 1) = Complex(0.0, 1.0);
    m(1, 0) = Complex(0.0, -1.0);
    const auto es = eigh(HermitianMatrix(m));
    EXPECT_NEAR(es.values[0], -1.0, 1e-14);
    EXPECT_NEAR(es.values[1], 1.0, 1e-14);
}

TEST(IsPsd, Examples) {
    EXPECT_TRUE(is_psd(HermitianMatrix::identity(2), 1e-9));
    EXPECT_FALSE(is_psd(HermitianMatrix::diagonal({1.0, -0.01}), 1e-9));
    EXPECT_TRUE(is_psd(qutrit_dichotomic_povm()[0], 1e-9));
}

TEST(IsPsd, ShiftedBelowSpectrumFails) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto rho = random_density_matrix(3, rng).matrix();
        EXPECT_TRUE(is_psd(rho, 1e-9));
        auto shifted = rho;
        const double em = eig_min(rho);
        for (std::size_t i = 0; i < 3; ++i) {
            shifted.add_to_diagonal(i, -(em + 1e-6));
        }
        EXPECT_FALSE(is_psd(shifted, 1e-9));
    }
}

TEST(EigMin, MinNotAboveMax) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const Matrix g = random_ginibre(4, rng);
        const auto h = HermitianMatrix::hermitian_part(g);
        EXPECT_LE(eig_min(h) + eig_min(-h), 1e-12);
    }
}

TEST(ConjSandwich, IdentityKraus) {
    std::mt19937_64 rng(1);
    const auto m = random_density_matrix(3, rng).matrix();
    EXPECT_LT(max_diff(conj_sandwich(Matrix::identity(3), m).matrix(), m.matrix()), 1e-15);
}

TEST(ConjSandwich, ProjectsOntoPlus) {
    const double h = std::numbers::sqrt2 / 2.0;
    // K = |0><+|
    const Matrix k = Matrix::outer({1.0, 0.0}, {h, h});
    const auto out = conj_sandwich(k, HermitianMatrix::diagonal({1.0, 0.0}));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            EXPECT_NEAR(std::abs(out(i, j) - Complex(0.5)), 0.0, 1e-15);
        }
    }
}

TEST(ConjSandwich, ZeroKraus) {
    const auto out = conj_sandwich(Matrix(2), HermitianMatrix::identity(2));
    EXPECT_EQ(out.max_abs(), 0.0);
}

TEST(ConjSandwich, OutputExactlyHermitian) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        const Matrix k = random_ginibre(4, rng);
        const auto out = conj_sandwich(k, random_density_matrix(4, rng).matrix());
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_EQ(out(i, i).imag(), 0.0);
            for (std::size_t j = 0; j < 4; ++j) {
                EXPECT_EQ(out(i, j), std::conj(out(j, i)));
            }
        }
    }
}

TEST(ConjSandwich, DimensionMismatch) {
    EXPECT_THROW(conj_sandwich(Matrix(3), HermitianMatrix::identity(2)), DimensionError);
}

TEST(LuFactorization, SolvesAndDetectsSingular) {
    RealMatrix a(3, 3);
    const double v[3][3] = {{4, 1, 0}, {1, 3, 1}, {0, 1, 2}};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            a(i, j) = v[i][j];
        }
    }
    const LuFactorization lu(a);
    const auto x = lu.solve({1.0, 2.0, 3.0});
    const auto ax = a.apply(x);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(ax[i], 1.0 + static_cast<double>(i), 1e-14);
    }
    RealMatrix s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = 2;
    s(1, 0) = 2;
    s(1, 1) = 4;
    EXPECT_TRUE(LuFactorization(s).singular());
}

} // namespace
} // namespace povmcoh

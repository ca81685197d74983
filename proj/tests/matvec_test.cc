// Copyright 2026 The paritybit Authors
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

#include "paritybit/matvec.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "paritybit/errors.h"
#include "paritybit/signals.h"

namespace paritybit {
namespace {

DensityMatrix random_symmetric(std::size_t dim, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    DensityMatrix m(dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = i; j < dim; j++) {
            m.set(i, j, u(rng));
        }
    }
    return m;
}

DensityMatrix product(const DensityMatrix &a, const DensityMatrix &b) {
    DensityMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = i; j < a.dim(); j++) {
            double sum = 0;
            for (std::size_t l = 0; l < a.dim(); l++) {
                sum += a.at(i, l) * b.at(l, j);
            }
            out.set(i, j, sum);
        }
    }
    return out;
}

TEST(DensityMatrix, RejectsNonSquareAndAsymmetric) {
    EXPECT_THROW(DensityMatrix::from_rows({{1, 0}, {0}}), StructureError);
    EXPECT_THROW(DensityMatrix::from_rows({{1, 0.1}, {0.1000001, 0}}), StructureError);
    EXPECT_NO_THROW(DensityMatrix::from_rows({{0.5, 0.1}, {0.1, 0.5}}));
}

TEST(DensityMatrix, TraceContracts) {
    auto half = DensityMatrix::identity(2);
    half *= 0.5;
    EXPECT_NO_THROW(check_trace(half, TraceContract::kNormalized));
    EXPECT_THROW(check_trace(half, TraceContract::kDifference), StructureError);
    auto diff = DensityMatrix::from_rows({{0, 0.5}, {0.5, 0}});
    EXPECT_NO_THROW(check_trace(diff, TraceContract::kDifference));
}

TEST(DensityMatrix, SmallestEigenvalue) {
    auto m = DensityMatrix::from_rows({{2, 1}, {1, 2}});
    EXPECT_NEAR(smallest_eigenvalue_2x2(m), 1.0, 1e-15);
    EXPECT_FALSE(is_psd_2x2(DensityMatrix::from_rows({{0.5, 0.6}, {0.6, 0.5}})));
    EXPECT_TRUE(is_psd_2x2(DensityMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}})));
}

TEST(Tensor, ProductOfPureSignalDiagonals) {
    SignalPair sig(0.3);
    auto [rho, delta] = total_and_difference(sig);
    auto t = tensor(rho, rho);
    double c2 = sig.c2(), s2 = sig.s2();
    auto expected = DensityMatrix::diagonal(std::vector<double>{c2 * c2, c2 * s2, c2 * s2, s2 * s2});
    EXPECT_LE(max_abs_difference(t, expected), 1e-16);
}

TEST(Tensor, MaximallyMixed) {
    auto h = DensityMatrix::identity(2);
    h *= 0.5;
    auto q = DensityMatrix::identity(4);
    q *= 0.25;
    EXPECT_EQ(tensor(h, h), q);
}

TEST(Tensor, DifferenceAtPiOverEight) {
    auto [rho, delta] = total_and_difference(SignalPair(std::numbers::pi / 8));
    auto t = tensor(delta, delta);
    for (std::size_t i = 0; i < 4; i++) {
        for (std::size_t j = 0; j < 4; j++) {
            double expect = (i + j == 3) ? 0.125 : 0.0;
            EXPECT_NEAR(t.at(i, j), expect, 1e-16) << i << "," << j;
        }
    }
}

TEST(Tensor, EnforcesDimensionCap) {
    auto a = DensityMatrix::identity(8);
    EXPECT_THROW(tensor(a, a, 32), SizeError);
    EXPECT_NO_THROW(tensor(a, a, 64));
}

TEST(TensorProperty, TraceIsMultiplicative) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        auto a = random_symmetric(1 + trial % 4, rng);
        auto b = random_symmetric(1 + trial % 3, rng);
        EXPECT_NEAR(trace(tensor(a, b)), trace(a) * trace(b), 1e-12);
    }
}

TEST(TensorProperty, Associative) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_symmetric(2, rng);
        auto b = random_symmetric(2, rng);
        auto c = random_symmetric(2, rng);
        auto left = tensor(tensor(a, b), c);
        auto right = tensor(a, tensor(b, c));
        EXPECT_LE(max_abs_difference(left, right), 4e-16);
    }
}

TEST(BasisPermutation, ComplementPairingMap) {
    for (int n = 1; n <= 6; n++) {
        auto p = BasisPermutation::complement_pairing(n);
        std::size_t dim = std::size_t{1} << n;
        for (std::size_t i = 0; i < dim; i++) {
            std::size_t expect = (i % 2 == 0) ? i / 2 : dim - (i + 1) / 2;
            EXPECT_EQ(p.source(i), expect);
        }
    }
}

TEST(BasisPermutation, RejectsNonBijection) {
    EXPECT_THROW(BasisPermutation(2, {0, 1, 1, 3}), StructureError);
    EXPECT_THROW(BasisPermutation(2, {0, 1, 2}), StructureError);
}

TEST(Conjugate, IdentityAndRoundTrip) {
    std::mt19937_64 rng(3);
    auto m = random_symmetric(8, rng);
    EXPECT_EQ(conjugate_by_permutation(m, BasisPermutation::identity(3)), m);
    auto p = BasisPermutation::complement_pairing(3);
    EXPECT_EQ(conjugate_by_permutation(conjugate_by_permutation(m, p), p.inverse()), m);
}

TEST(Conjugate, TwoBitParityMatrixBecomesBlockDiagonal) {
    SignalPair sig(0.4);
    double c2 = sig.c2(), s2 = sig.s2(), x = sig.coherence() * sig.coherence();
    auto rho0 = DensityMatrix::from_rows(
        {{c2 * c2, 0, 0, x}, {0, c2 * s2, x, 0}, {0, x, c2 * s2, 0}, {x, 0, 0, s2 * s2}});
    auto blocks = conjugate_by_permutation(rho0, BasisPermutation::complement_pairing(2));
    auto expected = DensityMatrix::from_rows(
        {{c2 * c2, x, 0, 0}, {x, s2 * s2, 0, 0}, {0, 0, c2 * s2, x}, {0, 0, x, c2 * s2}});
    EXPECT_EQ(blocks, expected);
    EXPECT_NEAR(x, c2 * s2, 1e-16);
}

TEST(ConjugateProperty, TracesOfPowersPreserved) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 5; n++) {
        auto m = random_symmetric(std::size_t{1} << n, rng);
        auto pm = conjugate_by_permutation(m, BasisPermutation::complement_pairing(n));
        auto m2 = product(m, m), pm2 = product(pm, pm);
        EXPECT_NEAR(trace(pm), trace(m), 1e-10);
        EXPECT_NEAR(trace(pm2), trace(m2), 1e-10);
        EXPECT_NEAR(trace(product(pm2, pm)), trace(product(m2, m)), 1e-10);
    }
}

TEST(Projective, StandardBasis) {
    SignalPair sig(0.35);
    auto [rho, delta] = total_and_difference(sig);
    auto p = projective_probabilities(rho, Basis::from_dense({{1, 0}, {0, 1}}));
    EXPECT_NEAR(p[0], sig.c2(), 1e-16);
    EXPECT_NEAR(p[1], sig.s2(), 1e-16);
}

TEST(Projective, MaximallyMixedInRotatedBasis) {
    auto h = DensityMatrix::identity(2);
    h *= 0.5;
    double t = 0.7;
    auto p = projective_probabilities(h, Basis::from_dense({{std::cos(t), std::sin(t)}, {-std::sin(t), std::cos(t)}}));
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
}

TEST(Projective, XBasisAtPiOverEight) {
    auto [rho0, rho1] = single_bit_matrices(SignalPair(std::numbers::pi / 8));
    double h = std::sqrt(0.5);
    auto p = projective_probabilities(rho0, Basis::from_dense({{h, h}, {h, -h}}));
    EXPECT_NEAR(p[0], 0.8535533905932737, 1e-15);
    EXPECT_NEAR(p[1], 0.14644660940672624, 1e-15);
}

TEST(Projective, RejectsNonOrthonormalBasis) {
    auto h = DensityMatrix::identity(2);
    EXPECT_THROW(projective_probabilities(h, Basis::from_dense({{1, 0}, {1, 1}})), StructureError);
    EXPECT_THROW(projective_probabilities(h, Basis::from_dense({{1, 0}})), StructureError);
}

TEST(ProjectiveProperty, CompleteBasisSumsToTrace) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, std::numbers::pi);
    for (int trial = 0; trial < 30; trial++) {
        // Tensor product of rotated 2x2 bases on a random PSD-looking matrix.
        auto m = random_symmetric(4, rng);
        double a = u(rng), b = u(rng);
        std::vector<std::vector<double>> vecs;
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                double ua[2] = {i ? -std::sin(a) : std::cos(a), i ? std::cos(a) : std::sin(a)};
                double ub[2] = {j ? -std::sin(b) : std::cos(b), j ? std::cos(b) : std::sin(b)};
                vecs.push_back({ua[0] * ub[0], ua[0] * ub[1], ua[1] * ub[0], ua[1] * ub[1]});
            }
        }
        // Shift to PSD so probabilities are non-negative.
        m += 5.0 * DensityMatrix::identity(4);
        double sum = 0;
        for (double p : projective_probabilities(m, Basis::from_dense(vecs))) {
            sum += p;
        }
        EXPECT_NEAR(sum, trace(m), 1e-10);
    }
}

}  // namespace
}  // namespace paritybit

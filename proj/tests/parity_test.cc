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

#include "paritybit/parity.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>

#include "paritybit/errors.h"

namespace paritybit {
namespace {

constexpr double kPi8 = std::numbers::pi / 8;

class ScopedEnv {
   public:
    ScopedEnv(const char *name, const char *value) : name_(name) {
        ::setenv(name, value, 1);
    }
    ~ScopedEnv() {
        ::unsetenv(name_);
    }

   private:
    const char *name_;
};

DensityMatrix explicit_two_bit(const SignalPair &sig, double sign) {
    double c2 = sig.c2(), s2 = sig.s2(), x = sign * sig.coherence() * sig.coherence();
    return DensityMatrix::from_rows(
        {{c2 * c2, 0, 0, x}, {0, c2 * s2, x, 0}, {0, x, c2 * s2, 0}, {x, 0, 0, s2 * s2}});
}

TEST(Bruteforce, BaseCaseIsSingleBit) {
    SignalPair sig(0.4, 0.1);
    auto [rho0, rho1] = parity_matrices_bruteforce(sig, 1);
    auto [s0, s1] = single_bit_matrices(sig);
    EXPECT_EQ(rho0, s0);
    EXPECT_EQ(rho1, s1);
}

TEST(Bruteforce, TwoBitMatrices) {
    for (double alpha : {0.1, kPi8, 0.6}) {
        SignalPair sig(alpha);
        auto [rho0, rho1] = parity_matrices_bruteforce(sig, 2);
        EXPECT_LE(max_abs_difference(rho0, explicit_two_bit(sig, 1)), 1e-16);
        EXPECT_LE(max_abs_difference(rho1, explicit_two_bit(sig, -1)), 1e-16);
    }
}

TEST(Bruteforce, CapFromEnvironment) {
    EXPECT_EQ(bruteforce_cap(), kDefaultBruteforceCap);
    EXPECT_THROW(parity_matrices_bruteforce(SignalPair(0.3), 13), SizeError);
    {
        ScopedEnv env("PARITYBIT_BRUTEFORCE_CAP", "3");
        EXPECT_EQ(bruteforce_cap(), 3);
        EXPECT_THROW(parity_matrices_bruteforce(SignalPair(0.3), 4), SizeError);
    }
    {
        ScopedEnv env("PARITYBIT_BRUTEFORCE_CAP", "17");
        EXPECT_THROW(bruteforce_cap(), ParameterError);
    }
    {
        ScopedEnv env("PARITYBIT_BRUTEFORCE_CAP", "ten");
        EXPECT_THROW(bruteforce_cap(), ParameterError);
    }
}

TEST(BruteforceProperty, AverageIsDiagonalAndDifferenceAntiDiagonal) {
    for (int n = 1; n <= 6; n++) {
        auto [rho0, rho1] = parity_matrices_bruteforce(SignalPair(0.35, 0.03), n);
        std::size_t dim = rho0.dim();
        for (std::size_t i = 0; i < dim; i++) {
            for (std::size_t j = 0; j < dim; j++) {
                if (i == j) {
                    EXPECT_EQ(rho0.at(i, j), rho1.at(i, j));
                } else if (i + j == dim - 1) {
                    EXPECT_EQ(rho0.at(i, j), -rho1.at(i, j));
                } else {
                    EXPECT_EQ(rho0.at(i, j), 0.0);
                    EXPECT_EQ(rho1.at(i, j), 0.0);
                }
            }
        }
    }
}

TEST(ClosedForm, TwoBitValues) {
    SignalPair sig(0.37);
    auto ens = block_channels_closed_form(sig, 2);
    ASSERT_EQ(ens.channels.size(), 2u);
    double c2 = sig.c2(), s2 = sig.s2(), big_c = sig.C();
    EXPECT_NEAR(ens.channels[0].q, c2 * c2 + s2 * s2, 1e-15);
    EXPECT_NEAR(ens.channels[1].q, 2 * c2 * s2, 1e-15);
    EXPECT_NEAR(ens.channels[1].q, sig.S() * sig.S() / 2, 1e-15);
    EXPECT_NEAR(ens.channels[1].p_err, 0.0, 1e-15);
    EXPECT_NEAR(ens.channels[0].p_err, big_c * big_c / (1 + big_c * big_c), 1e-15);
    EXPECT_EQ(ens.channels[0].multiplicity, 1);
    EXPECT_EQ(ens.channels[1].multiplicity, 1);
}

TEST(ClosedForm, OrthogonalCase) {
    for (int n : {1, 2, 5, 12, 40}) {
        auto ens = block_channels_closed_form(SignalPair(kQuarterPi), n);
        for (const auto &ch : ens.channels) {
            EXPECT_NEAR(ch.p_err, 0.0, 1e-15);
            EXPECT_NEAR(ch.q, std::ldexp(1.0, -(n - 1)), 1e-15 * std::ldexp(1.0, -(n - 1)));
        }
    }
}

TEST(ClosedForm, MatchesExtractedBlocks) {
    SignalPair sig(0.3, 0.05);
    int n = 4;
    auto ens = block_channels_closed_form(sig, n);
    auto [rho0, rho1] = parity_matrices_bruteforce(sig, n);
    auto blocks = extract_blocks(rho0, rho1);
    std::map<int, int> counts;
    for (const auto &b : blocks) {
        counts[b.k]++;
        const BlockChannel &ch = ens.channels.at(b.k);
        double q = trace(b.block0);
        EXPECT_NEAR(q, ch.q, 1e-15);
        EXPECT_NEAR(std::abs(b.block0.at(0, 1)) / q, ch.bias, 1e-13);
        EXPECT_NEAR(0.5 - std::abs(b.block0.at(0, 1)) / q, ch.p_err, 1e-13);
        auto [e0, e1] = normalized_block(sig, n, b.weight);
        EXPECT_LE(max_abs_difference((1 / q) * b.block0, e0), 1e-13);
        EXPECT_LE(max_abs_difference((1 / q) * b.block1, e1), 1e-13);
        EXPECT_TRUE(is_psd_2x2(b.block0));
    }
    for (const auto &ch : ens.channels) {
        EXPECT_EQ(counts[ch.k], ch.multiplicity);
        EXPECT_FALSE(ch.p_inconclusive.has_value());
    }
}

TEST(ClosedForm, ChannelCountsAndMultiplicities) {
    for (int n = 1; n <= 30; n++) {
        auto ens = block_channels_closed_form(SignalPair(0.2), n);
        std::size_t expected = n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2;
        EXPECT_EQ(ens.channels.size(), expected);
        EXPECT_DOUBLE_EQ(ens.total_multiplicity(), std::ldexp(1.0, n - 1));
        for (const auto &ch : ens.channels) {
            double binom = std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(ch.k + 1.0) -
                                               std::lgamma(n - ch.k + 1.0)));
            EXPECT_DOUBLE_EQ(ch.multiplicity, 2 * ch.k == n ? binom / 2 : binom);
        }
    }
}

TEST(ClosedFormProperty, WeightsSumToOneInLogDomain) {
    for (double alpha : {1e-6, 0.01, 0.2, kPi8, 0.7, kQuarterPi}) {
        for (int n : {1, 2, 3, 10, 101, 1000, 4096, 10000}) {
            SignalPair sig(alpha);
            auto ens = block_channels_closed_form(sig, n);
            EXPECT_NEAR(ens.total_weight(), 1.0, 1e-12) << alpha << " " << n;
            for (const auto &ch : ens.channels) {
                EXPECT_GE(ch.p_err, 0.0);
                EXPECT_LE(ch.p_err, 0.5);
                ASSERT_TRUE(ch.p_inconclusive.has_value());
                EXPECT_GE(*ch.p_inconclusive, 0.0);
                EXPECT_LE(*ch.p_inconclusive, 1.0);
            }
        }
    }
}

TEST(ClosedFormProperty, QMatchesDirectFormula) {
    for (double alpha : {0.05, 0.3, 0.7}) {
        SignalPair sig(alpha);
        for (int n = 1; n <= 12; n++) {
            for (int k = 0; k <= n; k++) {
                double direct = std::pow(sig.c(), 2 * (n - k)) * std::pow(sig.s(), 2 * k) +
                                std::pow(sig.c(), 2 * k) * std::pow(sig.s(), 2 * (n - k));
                EXPECT_NEAR(block_channel(sig, n, k).q, direct, 1e-14);
            }
        }
    }
}

TEST(ClosedFormProperty, KSymmetry) {
    for (double alpha : {0.01, 0.3, kPi8}) {
        for (double frac : {0.0, 0.2}) {
            SignalPair sig(alpha, frac * 0.5 * SignalPair(alpha).S());
            for (int n = 1; n <= 15; n++) {
                for (int k = 0; k <= n; k++) {
                    auto a = block_channel(sig, n, k);
                    auto b = block_channel(sig, n, n - k);
                    EXPECT_EQ(a.q, b.q);
                    EXPECT_EQ(a.p_err, b.p_err);
                    EXPECT_EQ(a.p_inconclusive, b.p_inconclusive);
                }
            }
        }
    }
}

TEST(ClosedForm, RejectsBadArguments) {
    EXPECT_THROW(block_channels_closed_form(SignalPair(0.2), 0), ParameterError);
    EXPECT_THROW(block_channel(SignalPair(0.2), 3, 4), ParameterError);
    EXPECT_THROW(block_channel(SignalPair(0.2), 3, -1), ParameterError);
}

TEST(ExtractBlocks, TwoBitBlocks) {
    SignalPair sig(0.5);
    auto blocks = extract_blocks(explicit_two_bit(sig, 1), explicit_two_bit(sig, -1));
    ASSERT_EQ(blocks.size(), 2u);
    double c2 = sig.c2(), s2 = sig.s2();
    EXPECT_EQ(blocks[0].k, 0);
    EXPECT_NEAR(blocks[0].block0.at(0, 0), c2 * c2, 1e-16);
    EXPECT_NEAR(blocks[0].block0.at(1, 1), s2 * s2, 1e-16);
    EXPECT_NEAR(blocks[0].block0.at(0, 1), c2 * s2, 1e-16);
    EXPECT_EQ(blocks[1].k, 1);
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            EXPECT_NEAR(blocks[1].block0.at(i, j), c2 * s2, 1e-16);
        }
    }
}

TEST(ExtractBlocks, SingleBit) {
    auto [rho0, rho1] = single_bit_matrices(SignalPair(0.2, 0.01));
    auto blocks = extract_blocks(rho0, rho1);
    ASSERT_EQ(blocks.size(), 1u);
    EXPECT_EQ(blocks[0].block0, rho0);
    EXPECT_EQ(blocks[0].block1, rho1);
}

TEST(ExtractBlocks, ThreeBitClassCounts) {
    auto [rho0, rho1] = parity_matrices_bruteforce(SignalPair(kPi8), 3);
    auto blocks = extract_blocks(rho0, rho1);
    ASSERT_EQ(blocks.size(), 4u);
    std::map<int, int> counts;
    for (const auto &b : blocks) {
        counts[b.k]++;
        EXPECT_EQ(b.partner, 7 - b.index);
    }
    EXPECT_EQ(counts[0], 1);
    EXPECT_EQ(counts[1], 3);
}

TEST(ExtractBlocks, RejectsNonXShaped) {
    auto m = DensityMatrix::identity(4);
    m.set(0, 1, 0.1);
    EXPECT_THROW(extract_blocks(m, m), StructureError);
}

TEST(BellBasis, OneAndTwoBits) {
    double h = std::sqrt(0.5);
    auto b1 = generalized_bell_basis(1);
    EXPECT_EQ(b1.dense(0), (std::vector<double>{h, h}));
    EXPECT_EQ(b1.dense(1), (std::vector<double>{h, -h}));
    auto b2 = generalized_bell_basis(2);
    EXPECT_EQ(b2.dense(0), (std::vector<double>{h, 0, 0, h}));
    EXPECT_EQ(b2.dense(1), (std::vector<double>{h, 0, 0, -h}));
    EXPECT_EQ(b2.dense(2), (std::vector<double>{0, h, h, 0}));
    EXPECT_EQ(b2.dense(3), (std::vector<double>{0, h, -h, 0}));
}

TEST(BellBasis, ThreeBitGram) {
    auto b = generalized_bell_basis(3);
    ASSERT_EQ(b.size(), 8u);
    for (std::size_t i = 0; i < 8; i++) {
        for (std::size_t j = 0; j < 8; j++) {
            auto u = b.dense(i), v = b.dense(j);
            double dot = 0;
            for (std::size_t t = 0; t < 8; t++) {
                dot += u[t] * v[t];
            }
            EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-15);
        }
    }
    EXPECT_LE(b.orthonormality_error(), 1e-15);
}

}  // namespace
}  // namespace paritybit

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

#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "log_domain.h"
#include "paritybit/errors.h"

namespace paritybit {

using internal::kLn2;
using internal::kNegInf;

namespace {

void require_n(int n, const char *fn) {
    if (n < 1) {
        std::ostringstream msg;
        msg << fn << ": n must be >= 1, got " << n;
        throw ParameterError(msg.str());
    }
}

// (a0 (x) b0 + a1 (x) b1) / 2 for 2x2 a's, without materializing either product.
DensityMatrix half_sum_of_products(const DensityMatrix &a0, const DensityMatrix &b0, const DensityMatrix &a1,
                                   const DensityMatrix &b1) {
    std::size_t db = b0.dim();
    DensityMatrix out(2 * db);
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = i; j < 2; j++) {
            double x0 = a0.at(i, j);
            double x1 = a1.at(i, j);
            for (std::size_t k = 0; k < db; k++) {
                auto r0 = b0.row(k);
                auto r1 = b1.row(k);
                for (std::size_t l = 0; l < db; l++) {
                    out.set(i * db + k, j * db + l, 0.5 * (x0 * r0[l] + x1 * r1[l]));
                }
            }
        }
    }
    return out;
}

struct RawClass {
    long double log_a;  // c^{2(n-k)} s^{2k}
    long double log_b;  // c^{2k} s^{2(n-k)}
    long double log_q;
};

RawClass raw_class(const internal::LogTrig &t, int n, int k) {
    RawClass rc;
    rc.log_a = internal::scaled_log(2.0L * (n - k), t.log_c) + internal::scaled_log(2.0L * k, t.log_s);
    rc.log_b = internal::scaled_log(2.0L * k, t.log_c) + internal::scaled_log(2.0L * (n - k), t.log_s);
    rc.log_q = internal::log_add_exp(rc.log_a, rc.log_b);
    return rc;
}

}  // namespace

int bruteforce_cap() {
    const char *env = std::getenv("PARITYBIT_BRUTEFORCE_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultBruteforceCap;
    }
    std::string text(env);
    std::size_t used = 0;
    int cap = 0;
    try {
        cap = std::stoi(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || cap < 1 || cap > kMaxBruteforceCap) {
        throw ParameterError("PARITYBIT_BRUTEFORCE_CAP must be an integer in [1, " +
                             std::to_string(kMaxBruteforceCap) + "], got '" + text + "'");
    }
    return cap;
}

double ParityEnsemble::total_weight() const {
    double sum = 0;
    for (const auto &ch : channels) {
        sum += ch.weight;
    }
    return sum;
}

double ParityEnsemble::total_multiplicity() const {
    double sum = 0;
    for (const auto &ch : channels) {
        sum += ch.multiplicity;
    }
    return sum;
}

std::pair<DensityMatrix, DensityMatrix> parity_matrices_bruteforce(const SignalPair &sig, int n,
                                                                   std::optional<int> cap) {
    require_n(n, "parity_matrices_bruteforce");
    int limit = cap.value_or(bruteforce_cap());
    if (n > limit) {
        std::ostringstream msg;
        msg << "parity_matrices_bruteforce: n = " << n << " exceeds the brute-force cap " << limit;
        throw SizeError(msg.str());
    }
    auto [one0, one1] = single_bit_matrices(sig);
    DensityMatrix even = one0;
    DensityMatrix odd = one1;
    for (int m = 2; m <= n; m++) {
        DensityMatrix next_even = half_sum_of_products(one0, even, one1, odd);
        DensityMatrix next_odd = half_sum_of_products(one0, odd, one1, even);
        even = std::move(next_even);
        odd = std::move(next_odd);
    }
    return {std::move(even), std::move(odd)};
}

BlockChannel block_channel(const SignalPair &sig, int n, int k) {
    require_n(n, "block_channel");
    if (k < 0 || k > n) {
        std::ostringstream msg;
        msg << "block_channel: k must lie in [0, " << n << "], got " << k;
        throw ParameterError(msg.str());
    }
    auto trig = internal::log_trig(sig);
    RawClass rc = raw_class(trig, n, k);

    BlockChannel ch;
    ch.k = k;
    int cls = std::min(k, n - k);
    ch.log_multiplicity = internal::log_binomial(n, cls) - (2 * cls == n ? kLn2 : 0.0L);
    long double mult = std::exp(ch.log_multiplicity);
    ch.multiplicity = mult < 1e18L ? static_cast<double>(std::nearbyint(mult)) : static_cast<double>(mult);
    ch.log_q = rc.log_q;
    ch.q = static_cast<double>(std::exp(rc.log_q));
    ch.log_weight = ch.log_multiplicity + rc.log_q;
    ch.weight = static_cast<double>(std::exp(ch.log_weight));

    if (rc.log_q == kNegInf) {
        ch.bias = 0;
        ch.p_err = 0.5;
        if (sig.is_pure()) {
            ch.p_inconclusive = 1.0;
            ch.log_conclusive = kNegInf;
        }
        return ch;
    }
    long double log_bias = internal::scaled_log(n, trig.log_coherence) - rc.log_q;
    ch.bias = static_cast<double>(std::min(std::exp(log_bias), 0.5L));
    ch.p_err = 0.5 - ch.bias;
    if (sig.is_pure()) {
        long double gap = std::abs(rc.log_a - rc.log_b);
        ch.p_inconclusive = static_cast<double>(std::tanh(gap / 2));
        ch.log_conclusive = std::min(kLn2 + std::min(rc.log_a, rc.log_b) - rc.log_q, 0.0L);
    }
    return ch;
}

ParityEnsemble block_channels_closed_form(const SignalPair &sig, int n) {
    require_n(n, "block_channels_closed_form");
    ParityEnsemble ens{n, sig, {}};
    ens.channels.reserve(static_cast<std::size_t>(n / 2 + 1));
    for (int k = 0; k <= n / 2; k++) {
        ens.channels.push_back(block_channel(sig, n, k));
    }
    return ens;
}

std::pair<DensityMatrix, DensityMatrix> normalized_block(const SignalPair &sig, int n, int k) {
    BlockChannel ch = block_channel(sig, n, k);
    DensityMatrix b0(2);
    if (ch.log_q == kNegInf) {
        b0.set(0, 0, 0.5);
        b0.set(1, 1, 0.5);
        return {b0, b0};
    }
    RawClass rc = raw_class(internal::log_trig(sig), n, k);
    // A/q = 1 / (1 + B/A), evaluated from the smaller ratio for accuracy.
    double first = static_cast<double>(1.0L / (1.0L + std::exp(rc.log_b - rc.log_a)));
    double second = static_cast<double>(1.0L / (1.0L + std::exp(rc.log_a - rc.log_b)));
    b0.set(0, 0, first);
    b0.set(1, 1, second);
    DensityMatrix b1 = b0;
    b0.set(0, 1, ch.bias);
    b1.set(0, 1, -ch.bias);
    return {std::move(b0), std::move(b1)};
}

std::vector<ExtractedBlock> extract_blocks(const DensityMatrix &rho0, const DensityMatrix &rho1) {
    std::size_t dim = rho0.dim();
    if (rho1.dim() != dim || dim < 2 || !std::has_single_bit(dim)) {
        throw StructureError("extract_blocks: inputs must both be 2^n x 2^n with n >= 1");
    }
    int n = std::countr_zero(dim);
    constexpr double kTol = 1e-14;
    for (const DensityMatrix *m : {&rho0, &rho1}) {
        for (std::size_t i = 0; i < dim; i++) {
            auto row = m->row(i);
            for (std::size_t j = 0; j < dim; j++) {
                if (j != i && j != dim - 1 - i && std::abs(row[j]) > kTol) {
                    std::ostringstream msg;
                    msg.precision(17);
                    msg << "extract_blocks: input is not X-shaped, entry (" << i << ", " << j << ") = " << row[j];
                    throw StructureError(msg.str());
                }
            }
        }
    }

    auto perm = BasisPermutation::complement_pairing(n);
    DensityMatrix p0 = conjugate_by_permutation(rho0, perm);
    DensityMatrix p1 = conjugate_by_permutation(rho1, perm);
    for (const DensityMatrix *m : {&p0, &p1}) {
        for (std::size_t i = 0; i < dim; i++) {
            auto row = m->row(i);
            for (std::size_t j = 0; j < dim; j++) {
                if (i / 2 != j / 2 && std::abs(row[j]) > kTol) {
                    throw StructureError("extract_blocks: permuted matrix is not block diagonal");
                }
            }
        }
    }

    std::vector<ExtractedBlock> blocks;
    blocks.reserve(dim / 2);
    for (std::size_t j = 0; j < dim / 2; j++) {
        ExtractedBlock b;
        b.index = perm.source(2 * j);
        b.partner = perm.source(2 * j + 1);
        b.weight = std::popcount(b.index);
        b.k = std::min(b.weight, n - b.weight);
        b.block0 = DensityMatrix(2);
        b.block1 = DensityMatrix(2);
        for (std::size_t r = 0; r < 2; r++) {
            for (std::size_t c = r; c < 2; c++) {
                b.block0.set(r, c, p0.at(2 * j + r, 2 * j + c));
                b.block1.set(r, c, p1.at(2 * j + r, 2 * j + c));
            }
        }
        if (std::abs(trace(b.block0) - trace(b.block1)) > kTol) {
            std::ostringstream msg;
            msg << "extract_blocks: block " << j << " has different traces in rho_0 and rho_1";
            throw StructureError(msg.str());
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

Basis generalized_bell_basis(int n) {
    require_n(n, "generalized_bell_basis");
    if (n >= 63 || (std::size_t{1} << n) > kDefaultMaxDim) {
        std::ostringstream msg;
        msg << "generalized_bell_basis: 2^" << n << " exceeds the dimension cap " << kDefaultMaxDim;
        throw SizeError(msg.str());
    }
    std::size_t dim = std::size_t{1} << n;
    const double h = std::sqrt(0.5);
    std::vector<BasisVector> vectors;
    vectors.reserve(dim);
    for (std::size_t x = 0; x < dim / 2; x++) {
        std::size_t y = dim - 1 - x;
        vectors.push_back(BasisVector{{{x, h}, {y, h}}});
        vectors.push_back(BasisVector{{{x, h}, {y, -h}}});
    }
    return {dim, std::move(vectors)};
}

}  // namespace paritybit

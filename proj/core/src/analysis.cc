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

#include "paritybit/analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "log_domain.h"
#include "paritybit/errors.h"
#include "paritybit/infotheory.h"

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

void require_pure(const SignalPair &sig, const char *fn) {
    if (!sig.is_pure()) {
        std::ostringstream msg;
        msg << fn << ": defined for pure signals only (r = 0); the unambiguous measurement"
            << " needs every 2x2 block to be a pure state, which fails for r = " << sig.r();
        throw UnsupportedError(msg.str());
    }
}

int resolve_cap(std::optional<int> cap, int n, const char *fn) {
    int limit = cap.value_or(bruteforce_cap());
    if (n > limit) {
        std::ostringstream msg;
        msg << fn << ": n = " << n << " exceeds the brute-force cap " << limit;
        throw SizeError(msg.str());
    }
    return limit;
}

struct Tail {
    DensityMatrix product;
    int parity;
};

struct StringSums {
    std::size_t dim;
    std::vector<double> sum[2];
};

// Every string is prefix + tail. Each prefix is expanded once and all tails are
// applied while an output row is hot, so each string still contributes its own
// product term.
void accumulate_strings(const std::pair<DensityMatrix, DensityMatrix> &bit, const std::vector<Tail> &tails,
                        const DensityMatrix &prefix, int remaining, int parity, StringSums &sums,
                        std::size_t max_dim) {
    if (remaining > 0) {
        const DensityMatrix *one[2] = {&bit.first, &bit.second};
        for (int b = 0; b < 2; b++) {
            accumulate_strings(bit, tails, tensor(prefix, *one[b], max_dim), remaining - 1, parity ^ b, sums,
                               max_dim);
        }
        return;
    }
    std::size_t d = prefix.dim();
    std::size_t t = tails.front().product.dim();
    for (std::size_t i = 0; i < d; i++) {
        auto prow = prefix.row(i);
        for (std::size_t a = 0; a < t; a++) {
            std::size_t out_row = (i * t + a) * sums.dim;
            for (const Tail &tail : tails) {
                double *acc = sums.sum[parity ^ tail.parity].data() + out_row;
                auto trow = tail.product.row(a);
                for (std::size_t j = 0; j < d; j++) {
                    double pj = prow[j];
                    double *dst = acc + j * t;
                    for (std::size_t c = 0; c < t; c++) {
                        dst[c] += pj * trow[c];
                    }
                }
            }
        }
    }
}

}  // namespace

double optimal_information(const ParityEnsemble &ensemble) {
    double total = 0;
    for (const auto &ch : ensemble.channels) {
        if (ch.weight > 0) {
            total += ch.weight * bsc_information_from_bias(ch.bias);
        }
    }
    return total;
}

double optimal_information(const SignalPair &sig, int n) {
    return optimal_information(block_channels_closed_form(sig, n));
}

double single_particle_information(const SignalPair &sig, int n) {
    require_n(n, "single_particle_information");
    auto trig = internal::log_trig(sig);
    // bias = (2 (sc - r))^n / 2
    long double log_bias = internal::scaled_log(n, kLn2 + trig.log_coherence) - kLn2;
    return bsc_information_from_bias(static_cast<double>(std::exp(log_bias)));
}

double deterministic_information(const SignalPair &sig, int n) {
    require_pure(sig, "deterministic_information");
    auto ens = block_channels_closed_form(sig, n);
    double total = 0;
    for (const auto &ch : ens.channels) {
        total += static_cast<double>(std::exp(ch.log_weight + *ch.log_conclusive));
    }
    return total;
}

double deterministic_single_particle_information(const SignalPair &sig, int n) {
    require_pure(sig, "deterministic_single_particle_information");
    require_n(n, "deterministic_single_particle_information");
    if (sig.alpha() == 0) {
        return 0;
    }
    // 1 - cos 2alpha = 2 s^2
    long double log_base = kLn2 + 2 * internal::log_trig(sig).log_s;
    return static_cast<double>(std::exp(n * log_base));
}

double information_upper_bound(double alpha, int n) {
    require_n(n, "information_upper_bound");
    if (alpha <= 0) {
        return 0;
    }
    long double log_bound = n * std::log(2.0L * alpha) - 0.5L * std::log(std::numbers::pi_v<long double> * n / 2);
    return static_cast<double>(std::exp(log_bound));
}

AsymptoticEstimate asymptotic_information(const SignalPair &sig, int n) {
    require_pure(sig, "asymptotic_information");
    require_n(n, "asymptotic_information");
    AsymptoticEstimate est;
    est.small_angle = sig.alpha() < kSmallAngleLimit;
    est.upper_bound = information_upper_bound(sig.alpha(), n);
    if (sig.alpha() == 0) {
        return est;
    }
    long double log_alpha = std::log(static_cast<long double>(sig.alpha()));
    long double log_im;
    if (n % 2 == 0) {
        log_im = internal::log_binomial(n, n / 2) + n * log_alpha;
    } else {
        log_im = internal::log_binomial(n, (n - 1) / 2) + std::log(2 / kLn2) + (n + 1) * log_alpha;
    }
    est.i_m_leading = static_cast<double>(std::exp(log_im));
    long double log_is = 2.0L * n * (kLn2 + log_alpha) - std::log(2 * kLn2);
    est.i_s_leading = static_cast<double>(std::exp(log_is));
    return est;
}

double bruteforce_information(const SignalPair &sig, int n, std::optional<int> cap) {
    require_n(n, "bruteforce_information");
    int limit = resolve_cap(cap, n, "bruteforce_information");
    auto [rho0, rho1] = parity_matrices_bruteforce(sig, n, limit);
    Basis bell = generalized_bell_basis(n);
    return channel_mutual_information(
        ChannelTable(projective_probabilities(rho0, bell), projective_probabilities(rho1, bell)));
}

double block_measurement_information(const std::pair<DensityMatrix, DensityMatrix> &blocks, double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    Basis rotated = Basis::from_dense({{c, s}, {-s, c}});
    return channel_mutual_information(ChannelTable(projective_probabilities(blocks.first, rotated),
                                                   projective_probabilities(blocks.second, rotated)));
}

ScanResult block_measurement_scan(const SignalPair &sig, int n, int k, int steps) {
    require_n(n, "block_measurement_scan");
    if (k < 0 || 2 * k > n) {
        std::ostringstream msg;
        msg << "block_measurement_scan: k must lie in [0, " << n / 2 << "], got " << k;
        throw ParameterError(msg.str());
    }
    if (steps < 8) {
        throw ParameterError("block_measurement_scan: steps must be >= 8");
    }
    auto blocks = normalized_block(sig, n, k);
    ScanResult result;
    result.best_information = -1;
    for (int i = 0; i < steps; i++) {
        double theta = std::numbers::pi * i / steps;
        double info = block_measurement_information(blocks, theta);
        if (info > result.best_information) {
            result.best_information = info;
            result.best_angle = theta;
        }
    }
    result.quarter_pi_information = block_measurement_information(blocks, kQuarterPi);
    return result;
}

std::pair<DensityMatrix, DensityMatrix> sum_over_strings_oracle(const SignalPair &sig, int n,
                                                                std::optional<int> cap) {
    require_n(n, "sum_over_strings_oracle");
    int limit = resolve_cap(cap, n, "sum_over_strings_oracle");
    auto bit = single_bit_matrices(sig);
    std::size_t max_dim = std::size_t{1} << limit;
    int tail_bits = std::min(n, 3);
    std::vector<Tail> tails;
    for (int x = 0; x < (1 << tail_bits); x++) {
        DensityMatrix product = DensityMatrix::identity(1);
        for (int m = tail_bits - 1; m >= 0; m--) {
            product = tensor(product, ((x >> m) & 1) ? bit.second : bit.first, max_dim);
        }
        tails.push_back({std::move(product), std::popcount(static_cast<unsigned>(x)) & 1});
    }
    std::size_t dim = std::size_t{1} << n;
    StringSums acc{dim, {std::vector<double>(dim * dim, 0.0), std::vector<double>(dim * dim, 0.0)}};
    accumulate_strings(bit, tails, DensityMatrix::identity(1), n - tail_bits, 0, acc, max_dim);
    std::pair<DensityMatrix, DensityMatrix> sums{DensityMatrix(dim), DensityMatrix(dim)};
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = i; j < dim; j++) {
            sums.first.set(i, j, acc.sum[0][i * dim + j]);
            sums.second.set(i, j, acc.sum[1][i * dim + j]);
        }
    }
    double norm = std::ldexp(1.0, -(n - 1));
    sums.first *= norm;
    sums.second *= norm;
    return sums;
}

InfoReport make_report(const SignalPair &sig, int n) {
    require_n(n, "make_report");
    InfoReport rep;
    rep.n = n;
    rep.signal = sig;
    rep.i_m = optimal_information(sig, n);
    rep.i_s = single_particle_information(sig, n);
    rep.i_m_upper_bound = information_upper_bound(sig.alpha(), n);
    if (sig.is_pure()) {
        rep.i_d = deterministic_information(sig, n);
        rep.i_d_single = deterministic_single_particle_information(sig, n);
        rep.i_m_asymptotic = asymptotic_information(sig, n).i_m_leading;
    }
    if (rep.i_s > 0) {
        rep.ratio_check = rep.i_m / (rep.i_s * rep.i_s);
    }
    return rep;
}

}  // namespace paritybit

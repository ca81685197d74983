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

// Long-double log-domain helpers shared by the closed-form evaluators.

#ifndef PARITYBIT_SRC_LOG_DOMAIN_H
#define PARITYBIT_SRC_LOG_DOMAIN_H

#include <algorithm>
#include <cmath>
#include <limits>

#include "paritybit/signals.h"

namespace paritybit::internal {

inline constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();
inline constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

struct LogTrig {
    long double log_s;
    long double log_c;
    /// log(sc - r); -inf when the coherence vanishes.
    long double log_coherence;
};

inline LogTrig log_trig(const SignalPair &sig) {
    LogTrig t;
    long double a = sig.alpha();
    if (sig.is_orthogonal_angle()) {
        t.log_s = t.log_c = -0.5L * kLn2;
        long double coh = 0.5L - static_cast<long double>(sig.r());
        t.log_coherence = coh > 0 ? std::log(coh) : kNegInf;
        return t;
    }
    long double s = std::sin(a);
    t.log_s = s > 0 ? std::log(s) : kNegInf;
    t.log_c = 0.5L * std::log1p(-s * s);
    long double coh = 0.5L * std::sin(2 * a) - static_cast<long double>(sig.r());
    t.log_coherence = coh > 0 ? std::log(coh) : kNegInf;
    return t;
}

/// count * log_x, with 0 * (-inf) taken as 0 (x^0 = 1 even for x = 0).
inline long double scaled_log(long double count, long double log_x) {
    return count == 0 ? 0.0L : count * log_x;
}

inline long double log_add_exp(long double a, long double b) {
    long double hi = std::max(a, b);
    long double lo = std::min(a, b);
    if (hi == kNegInf) {
        return kNegInf;
    }
    return hi + std::log1p(std::exp(lo - hi));
}

inline long double log_binomial(long double n, long double k) {
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace paritybit::internal

#endif

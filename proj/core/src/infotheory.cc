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

#include "paritybit/infotheory.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "paritybit/errors.h"

namespace paritybit {

namespace {

constexpr double kSlack = 1e-12;

double clamp_probability(double x, const char *fn) {
    if (!(x >= -kSlack && x <= 1 + kSlack)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << fn << ": probability " << x << " outside [0, 1]";
        throw DomainError(msg.str());
    }
    return std::clamp(x, 0.0, 1.0);
}

// -x log2 x, with the 0 log 0 = 0 convention.
double neg_x_log2_x(double x) {
    return x > 0 ? -x * std::log2(x) : 0.0;
}

// (1+u) ln(1+u) + (1-u) ln(1-u) = sum_{m>=1} u^{2m} / (m (2m-1)).
double even_log_series(double u) {
    double u2 = u * u;
    double power = u2;
    double sum = 0;
    for (int m = 1; m < 200; m++) {
        double term = power / (m * (2.0 * m - 1));
        sum += term;
        if (term <= sum * 1e-18) {
            break;
        }
        power *= u2;
    }
    return sum;
}

}  // namespace

double shannon_entropy(double x) {
    x = clamp_probability(x, "shannon_entropy");
    if (x == 0 || x == 1) {
        return 0;
    }
    // (1-x) log2(1-x) through log1p keeps the small-x end accurate.
    return neg_x_log2_x(x) - (1 - x) * std::log1p(-x) / std::numbers::ln2;
}

double bsc_information(double p) {
    p = clamp_probability(p, "bsc_information");
    return bsc_information_from_bias(0.5 - p);
}

double bsc_information_from_bias(double bias) {
    double eta = std::abs(bias);
    if (!(eta <= 0.5 + kSlack)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "bsc_information_from_bias: |bias| " << bias << " exceeds 1/2";
        throw DomainError(msg.str());
    }
    eta = std::min(eta, 0.5);
    double u = 2 * eta;
    if (u <= 0.25) {
        return even_log_series(u) / (2 * std::numbers::ln2);
    }
    return 1 - shannon_entropy(0.5 - eta);
}

double erasure_information(double p_inconclusive) {
    if (!(p_inconclusive >= 0 && p_inconclusive <= 1)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "erasure_information: probability " << p_inconclusive << " outside [0, 1]";
        throw DomainError(msg.str());
    }
    return 1 - p_inconclusive;
}

ChannelTable::ChannelTable(std::vector<double> given_zero, std::vector<double> given_one)
    : rows_{std::move(given_zero), std::move(given_one)} {
    if (rows_[0].size() != rows_[1].size() || rows_[0].empty()) {
        throw DomainError("ChannelTable: rows must be non-empty and of equal length");
    }
    for (std::size_t x = 0; x < 2; x++) {
        double sum = 0;
        for (double &v : rows_[x]) {
            if (v < 0 && v >= -kSlack) {
                v = 0;
            } else if (v > 1 && v <= 1 + kSlack) {
                v = 1;
            }
            if (!(v >= 0 && v <= 1)) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "ChannelTable: entry " << v << " in row " << x << " outside [0, 1]";
                throw DomainError(msg.str());
            }
            sum += v;
        }
        if (!(std::abs(sum - 1) <= 1e-10)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "ChannelTable: row " << x << " sums to " << sum;
            throw DomainError(msg.str());
        }
    }
}

ChannelTable ChannelTable::bsc(double p) {
    p = clamp_probability(p, "ChannelTable::bsc");
    return {{1 - p, p}, {p, 1 - p}};
}

double channel_mutual_information(const ChannelTable &table) {
    double info = 0;
    for (std::size_t y = 0; y < table.cols(); y++) {
        double a = table.at(0, y);
        double b = table.at(1, y);
        double mid = 0.5 * (a + b);
        if (a > 0) {
            info += 0.5 * a * std::log2(a / mid);
        }
        if (b > 0) {
            info += 0.5 * b * std::log2(b / mid);
        }
    }
    return std::clamp(info, 0.0, 1.0);
}

}  // namespace paritybit

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

#ifndef PARITYBIT_INFOTHEORY_H
#define PARITYBIT_INFOTHEORY_H

#include <array>
#include <cstddef>
#include <vector>

namespace paritybit {

/// Binary entropy in bits, H(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
/// Inputs within 1e-12 outside [0, 1] are clamped; anything further throws DomainError.
double shannon_entropy(double x);

/// Capacity 1 - H(p) of the binary symmetric channel with crossover p.
double bsc_information(double p);

/// Same quantity written as I2(1/2 - bias). Use this when the distance from
/// 1/2 is known directly: for |bias| below ~1e-8 the difference 1/2 - bias
/// is not representable, while I2 ~ (2/ln 2) bias^2 still is.
double bsc_information_from_bias(double bias);

/// Information 1 - p of a binary erasure channel with erasure probability p.
double erasure_information(double p_inconclusive);

/// Conditional outcome distributions P(y | x) for the two equiprobable inputs x = 0, 1.
class ChannelTable {
   public:
    /// in [0, 1] (1e-12 rounding is clamped) and each row sums to 1 within 1e-10.
    /// in [0, 1] and each row sums to 1 within 1e-10.
    ChannelTable(std::vector<double> given_zero, std::vector<double> given_one);

    static ChannelTable bsc(double p);

    std::size_t cols() const {
        return rows_[0].size();
    }
    double at(std::size_t input, std::size_t outcome) const {
        return rows_[input][outcome];
    }
    const std::vector<double> &row(std::size_t input) const {
        return rows_[input];
    }

   private:
    std::array<std::vector<double>, 2> rows_;
};

/// I(X; Y) in bits for uniform X. Each outcome contributes
/// (a log2(2a/(a+b)) + b log2(2b/(a+b))) / 2, which is H(Y) - H(Y|X)
/// without the cancellation between two entropies of order log2(cols).
double channel_mutual_information(const ChannelTable &table);

}  // namespace paritybit

#endif

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

#ifndef PARITYBIT_PARITY_H
#define PARITYBIT_PARITY_H

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "paritybit/matvec.h"
#include "paritybit/signals.h"

namespace paritybit {

/// Default largest n for which dense 2^n x 2^n parity matrices are built.
inline constexpr int kDefaultBruteforceCap = 12;
/// Hard ceiling on the cap; dense storage at 2^16 is already 32 GiB per matrix.
inline constexpr int kMaxBruteforceCap = 16;

/// The brute-force cap: PARITYBIT_BRUTEFORCE_CAP if set, else kDefaultBruteforceCap.
/// Throws ParameterError if the variable is not an integer in [1, kMaxBruteforceCap].
int bruteforce_cap();

/// One class of 2x2 subchannels in the block-diagonal parity matrices.
///
/// Every block of class k is, up to swapping its two basis vectors,
///
///     [[A, +-(sc - r)^n], [+-(sc - r)^n, B]],  A = c^{2(n-k)} s^{2k},  B = c^{2k} s^{2(n-k)}
///
/// chosen with probability q = A + B. The log-domain fields are the
/// primary values; the plain doubles are their exponentials and may
/// underflow to 0 (or overflow, for `multiplicity`) at large n.
struct BlockChannel {
    int k = 0;
    /// Number of blocks in the class: C(n, k), halved when 2k == n.
    double multiplicity = 0;
    long double log_multiplicity = 0;
    /// Probability of landing in one block of the class.
    double q = 0;
    long double log_q = 0;
    /// multiplicity * q: probability of landing anywhere in the class.
    double weight = 0;
    long double log_weight = 0;
    /// BSC crossover of the optimal measurement inside the block, 1/2 - bias.
    double p_err = 0.5;
    /// (sc - r)^n / q, the normalized off-diagonal. Kept separately because
    /// I2(p_err) ~ bias^2 is far below double resolution of p_err itself.
    double bias = 0;
    /// Inconclusive probability of the unambiguous measurement, |A - B| / (A + B).
    /// Only set for pure signals.
    std::optional<double> p_inconclusive;
    /// log(1 - p_inconclusive) = log(2 min(A, B) / q); set alongside p_inconclusive.
    std::optional<long double> log_conclusive;
};

/// All block classes k = 0 .. floor(n/2) for one signal pair and string length.
struct ParityEnsemble {
    int n = 0;
    SignalPair signal{0.0};
    std::vector<BlockChannel> channels;

    /// Sum of multiplicity * q over classes; 1 up to rounding.
    double total_weight() const;
    /// Sum of multiplicities, computed in floating point.
    double total_multiplicity() const;
};

/// rho_0^(n), rho_1^(n) built densely through
///   rho_p^(n) = (rho_0 (x) rho_p^(n-1) + rho_1 (x) rho_{1-p}^(n-1)) / 2.
///
/// Throws ParameterError for n < 1 and SizeError for n above `cap`
/// (default: bruteforce_cap()).
std::pair<DensityMatrix, DensityMatrix> parity_matrices_bruteforce(const SignalPair &sig, int n,
                                                                   std::optional<int> cap = std::nullopt);

/// The block class for weight k, evaluated for any 0 <= k <= n. Classes k
/// and n - k describe the same blocks; `multiplicity` is that of the class
/// min(k, n - k). Blocks with q == 0 get p_err = 1/2 and p_inconclusive = 1.
BlockChannel block_channel(const SignalPair &sig, int n, int k);

/// All classes k = 0 .. floor(n/2), ordered by k. No upper limit on n.
ParityEnsemble block_channels_closed_form(const SignalPair &sig, int n);

/// The normalized pair (B_0 / q, B_1 / q) for weight k (any 0 <= k <= n).
/// When q == 0 both are I/2.
std::pair<DensityMatrix, DensityMatrix> normalized_block(const SignalPair &sig, int n, int k);

/// One 2x2 block read out of the permuted parity matrices.
struct ExtractedBlock {
    /// Product-basis index paired with its complement 2^n - 1 - index.
    std::size_t index = 0;
    std::size_t partner = 0;
    /// popcount(index) and the class min(weight, n - weight).
    int weight = 0;
    int k = 0;
    DensityMatrix block0;
    DensityMatrix block1;
};

/// Splits X-shaped parity matrices into their 2^(n-1) blocks by conjugating
/// with BasisPermutation::complement_pairing(n).
///
/// Throws StructureError if the inputs differ in size, are not 2^n with
/// n >= 1, have an entry off both diagonals above 1e-14, or yield a block
/// whose traces in rho_0 and rho_1 differ by more than 1e-14.
std::vector<ExtractedBlock> extract_blocks(const DensityMatrix &rho0, const DensityMatrix &rho1);

/// (|x> + |~x>)/sqrt2, (|x> - |~x>)/sqrt2 for x = 0 .. 2^(n-1) - 1, in that order.
/// Throws ParameterError for n < 1 and SizeError if 2^n exceeds kDefaultMaxDim.
Basis generalized_bell_basis(int n);

}  // namespace paritybit

#endif

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

#ifndef PARITYBIT_ANALYSIS_H
#define PARITYBIT_ANALYSIS_H

#include <optional>
#include <utility>

#include "paritybit/matvec.h"
#include "paritybit/parity.h"
#include "paritybit/signals.h"

namespace paritybit {

/// Every information figure for one (signal, n) point, in bits.
struct InfoReport {
    int n = 0;
    SignalPair signal{0.0};
    /// Optimal joint measurement (generalized Bell basis).
    double i_m = 0;
    /// Optimal measurement of each bit separately, combined classically.
    double i_s = 0;
    /// Unambiguous measurement per block; pure signals only.
    std::optional<double> i_d;
    /// Unambiguous measurement of each bit separately, (1 - cos 2alpha)^n; pure signals only.
    std::optional<double> i_d_single;
    /// Leading small-angle term of i_m; pure signals only.
    std::optional<double> i_m_asymptotic;
    /// (2 alpha)^n / sqrt(pi n / 2).
    double i_m_upper_bound = 0;
    /// i_m / i_s^2; absent when i_s == 0.
    std::optional<double> ratio_check;
};

/// Leading-order small-angle terms, all computed in log domain.
struct AsymptoticEstimate {
    /// C(n, n/2) alpha^n for even n, C(n, (n-1)/2) (2/ln2) alpha^(n+1) for odd n.
    double i_m_leading = 0;
    /// (2 alpha)^(2n) / (2 ln 2).
    double i_s_leading = 0;
    /// (2 alpha)^n / sqrt(pi n / 2).
    double upper_bound = 0;
    /// False when alpha >= kSmallAngleLimit; the terms are then only indicative.
    bool small_angle = true;
};

inline constexpr double kSmallAngleLimit = 0.1;

/// I_M = sum_k multiplicity_k q_k I2(p_k). Works for any n >= 1.
double optimal_information(const SignalPair &sig, int n);
double optimal_information(const ParityEnsemble &ensemble);

/// I_S = I2(1/2 - (2(sc - r))^n / 2): each bit is an independent BSC(1/2 - (sc - r))
/// and the parity is wrong on an odd number of errors.
double single_particle_information(const SignalPair &sig, int n);

/// I_D = sum_k multiplicity_k q_k (1 - p?_k). Throws UnsupportedError for mixed signals.
double deterministic_information(const SignalPair &sig, int n);

/// (1 - cos 2alpha)^n. Throws UnsupportedError for mixed signals.
double deterministic_single_particle_information(const SignalPair &sig, int n);

/// (2 alpha)^n / sqrt(pi n / 2).
double information_upper_bound(double alpha, int n);

/// Throws UnsupportedError for mixed signals. Does not fail for large alpha;
/// check `small_angle` instead.
AsymptoticEstimate asymptotic_information(const SignalPair &sig, int n);

/// Builds rho_0^(n), rho_1^(n) densely, measures both in the generalized Bell
/// basis and returns the mutual information of the resulting 2 x 2^n channel.
/// Throws SizeError above the brute-force cap.
double bruteforce_information(const SignalPair &sig, int n, std::optional<int> cap = std::nullopt);

/// Information from measuring a normalized block pair in the rotated basis
/// {(cos t, sin t), (-sin t, cos t)}. t = pi/4 is the x basis.
double block_measurement_information(const std::pair<DensityMatrix, DensityMatrix> &blocks, double theta);

struct ScanResult {
    double best_angle = 0;
    double best_information = 0;
    /// Information at exactly t = pi/4, whether or not it is on the grid.
    double quarter_pi_information = 0;
};

/// Scans t = i pi / steps, i = 0 .. steps-1, over the normalized block of
/// class k. Throws ParameterError unless 0 <= k <= n/2 and steps >= 8.
ScanResult block_measurement_scan(const SignalPair &sig, int n, int k, int steps);

/// rho_p^(n) = 2^-(n-1) sum over strings x of parity p of rho_{x_1} (x) ... (x) rho_{x_n},
/// summed literally over all 2^n strings. Throws SizeError above the brute-force cap.
std::pair<DensityMatrix, DensityMatrix> sum_over_strings_oracle(const SignalPair &sig, int n,
                                                                std::optional<int> cap = std::nullopt);

/// Fills every field of InfoReport from the closed forms.
InfoReport make_report(const SignalPair &sig, int n);

}  // namespace paritybit

#endif

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

#ifndef PARITYBIT_SIGNALS_H
#define PARITYBIT_SIGNALS_H

#include <numbers>
#include <utility>

#include "paritybit/matvec.h"

namespace paritybit {

inline constexpr double kQuarterPi = std::numbers::pi / 4;

/// The two single-bit states
///
///     rho_0 = [[c^2, sc - r], [sc - r, s^2]],   rho_1 = [[c^2, -(sc - r)], [-(sc - r), s^2]]
///
/// with s = sin(alpha), c = cos(alpha). r = 0 gives the pure pair
/// (cos a, +-sin a); r > 0 shrinks the coherence while keeping both
/// determinants equal.
///
/// Valid parameters: 0 <= alpha <= pi/4, and 0 <= r < sc (r must be 0 when
/// alpha is 0). Angles within 1e-15 above pi/4 are snapped to pi/4, where
/// s and c are set to exactly sqrt(1/2).
class SignalPair {
   public:
    /// Throws ParameterError naming the violated bound.
    SignalPair(double alpha, double r = 0.0);

    static SignalPair pure(double alpha) {
        return SignalPair(alpha, 0.0);
    }

    double alpha() const {
        return alpha_;
    }
    double r() const {
        return r_;
    }
    double s() const {
        return s_;
    }
    double c() const {
        return c_;
    }
    /// sin(2 alpha)
    double S() const {
        return big_s_;
    }
    /// cos(2 alpha)
    double C() const {
        return big_c_;
    }
    /// s^2 and c^2; exactly 1/2 at alpha = pi/4.
    double s2() const {
        return s2_;
    }
    double c2() const {
        return c2_;
    }
    /// The coherence sc - r that appears off the diagonal.
    double coherence() const {
        return coherence_;
    }
    bool is_pure() const {
        return r_ == 0.0;
    }
    bool is_orthogonal_angle() const {
        return alpha_ == kQuarterPi;
    }

    /// Common determinant c^2 s^2 - (sc - r)^2 of both states.
    double determinant() const;

    bool operator==(const SignalPair &other) const = default;

   private:
    double alpha_;
    double r_;
    double s_, c_, big_s_, big_c_, s2_, c2_, coherence_;
};

/// (rho_0, rho_1) for one bit.
std::pair<DensityMatrix, DensityMatrix> single_bit_matrices(const SignalPair &sig);

/// (rho, Delta) = ((rho_0 + rho_1)/2, (rho_0 - rho_1)/2) = (diag(c^2, s^2), antidiag(sc - r)).
std::pair<DensityMatrix, DensityMatrix> total_and_difference(const SignalPair &sig);

/// Error probability 1/2 - (sc - r) of the optimal x-basis measurement on one bit.
double single_particle_error(const SignalPair &sig);

/// Angle alpha' of the pure pair whose Bloch vectors point the same way:
/// tan(2 alpha') = (sin 2alpha - 2r) / cos 2alpha. Result lies in [0, pi/4).
///
/// Throws DomainError at alpha = pi/4 (cos 2alpha = 0).
double equivalent_pure_angle(const SignalPair &sig);

/// As above, but also accepts r == sc (giving alpha' = 0), which SignalPair excludes.
/// Throws DomainError unless 0 <= alpha < pi/4 and 0 <= r <= sc.
double equivalent_pure_angle(double alpha, double r);

}  // namespace paritybit

#endif

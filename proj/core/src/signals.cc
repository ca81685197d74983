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

#include "paritybit/signals.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "paritybit/errors.h"

namespace paritybit {

namespace {

double snap_alpha(double alpha) {
    if (alpha > kQuarterPi && alpha <= kQuarterPi + 1e-15) {
        return kQuarterPi;
    }
    return alpha;
}

}  // namespace

SignalPair::SignalPair(double alpha, double r) : alpha_(snap_alpha(alpha)), r_(r) {
    if (!std::isfinite(alpha_) || alpha_ < 0 || alpha_ > kQuarterPi) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "alpha must satisfy 0 <= alpha <= pi/4, got " << alpha;
        throw ParameterError(msg.str());
    }
    if (alpha_ == kQuarterPi) {
        s_ = c_ = std::sqrt(0.5);
        s2_ = c2_ = 0.5;
        big_s_ = 1;
        big_c_ = 0;
    } else {
        s_ = std::sin(alpha_);
        c_ = std::cos(alpha_);
        s2_ = s_ * s_;
        c2_ = c_ * c_;
        big_s_ = std::sin(2 * alpha_);
        big_c_ = std::cos(2 * alpha_);
    }
    double sc = 0.5 * big_s_;
    if (!std::isfinite(r_) || r_ < 0) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "r must satisfy r >= 0, got " << r;
        throw ParameterError(msg.str());
    }
    if (alpha_ == 0 && r_ != 0) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "r must be 0 when alpha is 0, got " << r;
        throw ParameterError(msg.str());
    }
    if (alpha_ > 0 && !(r_ < sc)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "r must satisfy r < sin(alpha)cos(alpha) = " << sc << ", got " << r;
        throw ParameterError(msg.str());
    }
    coherence_ = sc - r_;
}

double SignalPair::determinant() const {
    return c2_ * s2_ - coherence_ * coherence_;
}

std::pair<DensityMatrix, DensityMatrix> single_bit_matrices(const SignalPair &sig) {
    DensityMatrix rho0(2);
    rho0.set(0, 0, sig.c2());
    rho0.set(1, 1, sig.s2());
    DensityMatrix rho1 = rho0;
    rho0.set(0, 1, sig.coherence());
    rho1.set(0, 1, -sig.coherence());
    return {std::move(rho0), std::move(rho1)};
}

std::pair<DensityMatrix, DensityMatrix> total_and_difference(const SignalPair &sig) {
    DensityMatrix total(2);
    total.set(0, 0, sig.c2());
    total.set(1, 1, sig.s2());
    DensityMatrix diff(2);
    diff.set(0, 1, sig.coherence());
    return {std::move(total), std::move(diff)};
}

double single_particle_error(const SignalPair &sig) {
    return 0.5 - sig.coherence();
}

double equivalent_pure_angle(const SignalPair &sig) {
    if (sig.is_orthogonal_angle()) {
        throw DomainError("equivalent_pure_angle: undefined at alpha = pi/4 (cos 2alpha = 0)");
    }
    return 0.5 * std::atan2(sig.S() - 2 * sig.r(), sig.C());
}

double equivalent_pure_angle(double alpha, double r) {
    if (!(alpha >= 0 && alpha < kQuarterPi)) {
        throw DomainError("equivalent_pure_angle: requires 0 <= alpha < pi/4");
    }
    double big_s = std::sin(2 * alpha);
    if (!(r >= 0 && r <= 0.5 * big_s + 1e-15)) {
        throw DomainError("equivalent_pure_angle: requires 0 <= r <= sin(alpha)cos(alpha)");
    }
    return 0.5 * std::atan2(std::max(big_s - 2 * r, 0.0), std::cos(2 * alpha));
}

}  // namespace paritybit

// Copyright 2026 The qmaxent Authors
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

#include "qmaxent/states.h"

#include <cmath>
#include <numbers>

#include "qmaxent/errors.h"

namespace qmaxent {

SpinPureState::SpinPureState(int n, ComplexVector amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    if (n < 1 || amplitudes_.size() != (Eigen::Index{1} << n)) {
        throw Error(ErrorCode::DimensionMismatch, "amplitude vector does not have 2^n entries");
    }
    double norm = amplitudes_.squaredNorm();
    if (std::abs(norm - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "state is not normalized, |psi|^2 = " + std::to_string(norm), norm);
    }
}

DensityMatrix SpinPureState::density() const {
    ComplexMatrix projector = amplitudes_ * amplitudes_.adjoint();
    // Fold the O(1e-16) norm error into the trace so validation is exact.
    projector /= projector.trace().real();
    return validate(projector);
}

SpinPureState single_spin(double theta, double phi) {
    ComplexVector amps(2);
    amps(0) = std::cos(theta);
    amps(1) = std::polar(1.0, phi) * std::sin(theta);
    return SpinPureState(1, amps);
}

SpinPureState bell(double phi, BellFamily family) {
    ComplexVector amps = ComplexVector::Zero(4);
    double r = 1.0 / std::numbers::sqrt2;
    if (family == BellFamily::Psi) {
        amps(0) = r;
        amps(3) = std::polar(r, phi);
        return SpinPureState(2, amps);
    }
    double sign;
    if (std::abs(std::remainder(phi, 2 * std::numbers::pi)) < 1e-12) {
        sign = 1.0;
    } else if (std::abs(std::remainder(phi - std::numbers::pi, 2 * std::numbers::pi)) < 1e-12) {
        sign = -1.0;
    } else {
        throw Error(ErrorCode::InvalidFamilyParameter, "the Phi family only takes phi = 0 or pi", phi);
    }
    // |0,1> is index 2 and |1,0> is index 1.
    amps(2) = r;
    amps(1) = sign * r;
    return SpinPureState(2, amps);
}

SpinPureState ghz(double phi) {
    ComplexVector amps = ComplexVector::Zero(8);
    double r = 1.0 / std::numbers::sqrt2;
    amps(0) = r;
    amps(7) = std::polar(r, phi);
    return SpinPureState(3, amps);
}

DensityMatrix phase_averaged_ghz() {
    ComplexMatrix m = ComplexMatrix::Zero(8, 8);
    m(0, 0) = 0.5;
    m(7, 7) = 0.5;
    return validate(m);
}

DensityMatrix random_mixed_state(int n, std::mt19937_64 &rng) {
    auto dim = Eigen::Index{1} << n;
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            a(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    ComplexMatrix m = a * a.adjoint();
    m = (m + m.adjoint()) / 2.0;
    m /= m.trace().real();
    return validate(m);
}

}  // namespace qmaxent

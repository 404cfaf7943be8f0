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

#ifndef QMAXENT_STATES_H
#define QMAXENT_STATES_H

#include <random>

#include "qmaxent/density.h"

namespace qmaxent {

// Basis convention: |1> = (1, 0)^T and |0> = (0, 1)^T, so sigma_z |1> = +|1>.
// For several spins, site 1 is the most significant bit and a set bit means
// the spin is in |0>. |1,1> is index 0, |0,0> is index 3.

class SpinPureState {
   public:
    /// Requires unit norm to 1e-12.
    SpinPureState(int n, ComplexVector amplitudes);

    int spins() const noexcept {
        return n_;
    }
    const ComplexVector &amplitudes() const noexcept {
        return amplitudes_;
    }
    DensityMatrix density() const;

   private:
    int n_;
    ComplexVector amplitudes_;
};

SpinPureState single_spin(double theta, double phi);

enum class BellFamily {
    /// (|1,1> + e^{i phi} |0,0>)/sqrt 2, any phi.
    Psi,
    /// (|0,1> +- |1,0>)/sqrt 2 with phi = 0 (+) or pi (-).
    PhiPm,
};

SpinPureState bell(double phi, BellFamily family = BellFamily::Psi);
SpinPureState ghz(double phi);
/// (|111><111| + |000><000|)/2.
DensityMatrix phase_averaged_ghz();

/// Normalized A A^dagger with i.i.d. complex Gaussian A; full rank almost surely.
DensityMatrix random_mixed_state(int n, std::mt19937_64 &rng);

}  // namespace qmaxent

#endif

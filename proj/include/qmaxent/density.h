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

#ifndef QMAXENT_DENSITY_H
#define QMAXENT_DENSITY_H

#include <vector>

#include "qmaxent/pauli_algebra.h"

namespace qmaxent {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;

/// A Hermitian, unit-trace, positive semidefinite matrix of dimension 2^n.
/// Instances only come out of `validate`, so holding one is proof of validity.
class DensityMatrix {
   public:
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    int spins() const noexcept {
        return n_;
    }
    Eigen::Index dim() const noexcept {
        return matrix_.rows();
    }
    /// Eigenvalues in descending order.
    std::vector<double> eigenvalues() const;

    static DensityMatrix maximally_mixed(int n);

   private:
    friend DensityMatrix validate(const ComplexMatrix &m, double tol);
    DensityMatrix(ComplexMatrix m, int n) : matrix_(std::move(m)), n_(n) {
    }

    ComplexMatrix matrix_;
    int n_;
};

/// Checks Hermiticity (1e-12 elementwise), unit trace (1e-12) and
/// positivity. Eigenvalues in [-tol, 0) are clamped to zero and the result
/// renormalized; anything below -tol raises NegativeEigenvalue carrying the
/// minimum eigenvalue.
DensityMatrix validate(const ComplexMatrix &m, double tol = kPositivityTolerance);

struct EntropyReport {
    double von_neumann;
    double linear;
    std::vector<double> eigenvalues;
};

/// -sum p ln p over the spectrum, in nats, with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix &rho);
double von_neumann_entropy_of_spectrum(const std::vector<double> &eigenvalues);
double linear_entropy(const DensityMatrix &rho);
EntropyReport entropy_report(const DensityMatrix &rho);

/// exp(h) for Hermitian h via U exp(D) U^dagger. Throws NotHermitian.
ComplexMatrix exp_hermitian(const ComplexMatrix &h);

double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b);
double hermiticity_defect(const ComplexMatrix &m);

}  // namespace qmaxent

#endif

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

#ifndef QMAXENT_RESULT_H
#define QMAXENT_RESULT_H

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qmaxent/obslevel.h"

namespace qmaxent {

enum class Method { ClosedForm, Dual, PrimalScan, Oracle };

std::string_view method_name(Method method);

struct ReconstructionResult {
    DensityMatrix rho;
    double entropy;
    /// Lagrange multipliers aligned with the level, when the path produced them.
    std::optional<Eigen::VectorXd> multipliers;
    /// Partition function Z for the multipliers above.
    std::optional<double> partition;
    BlochExpansion predicted;
    Method method;
    /// Largest constraint violation of `rho`.
    double residual;
    /// Values of the unmeasured coefficients chosen by a primal scan.
    std::vector<std::pair<PauliString, double>> scan_point;
    int iterations = 0;
};

/// Validates `rho` and fills entropy, predictions and residual.
ReconstructionResult make_result(const ComplexMatrix &rho, const ConstraintSet &c, Method method,
                                 double positivity_tol = kPositivityTolerance);

}  // namespace qmaxent

#endif

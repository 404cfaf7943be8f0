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

#include "qmaxent/result.h"

namespace qmaxent {

std::string_view method_name(Method method) {
    switch (method) {
        case Method::ClosedForm:
            return "closed_form";
        case Method::Dual:
            return "dual";
        case Method::PrimalScan:
            return "primal_scan";
        case Method::Oracle:
            return "oracle";
    }
    return "unknown";
}

ReconstructionResult make_result(const ComplexMatrix &rho, const ConstraintSet &c, Method method, double positivity_tol) {
    DensityMatrix valid = validate(rho, positivity_tol);
    double entropy = von_neumann_entropy(valid);
    BlochExpansion predicted = bloch_decompose(valid.matrix());
    double residual = constraint_residual(valid.matrix(), c);
    return ReconstructionResult{std::move(valid), entropy, std::nullopt, std::nullopt, std::move(predicted),
                                method,           residual, {},          0};
}

}  // namespace qmaxent

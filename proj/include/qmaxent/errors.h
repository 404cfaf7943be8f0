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

#ifndef QMAXENT_ERRORS_H
#define QMAXENT_ERRORS_H

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qmaxent {

enum class ErrorCode {
    DimensionMismatch,
    NonRealExpectation,
    NotHermitian,
    TraceNotOne,
    NegativeEigenvalue,
    InvalidFamilyParameter,
    InvalidArgument,
    UnknownLevel,
    DuplicateObservable,
    NotMember,
    BoundaryDetected,
    Infeasible,
    MaxIterations,
    NoPhysicalPoint,
    BlochNormExceeded,
    NonPhysicalMeans,
    SyntaxError,
    SiteOutOfRange,
    DuplicateSite,
    SchemaError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
/// `value` holds the code-specific payload: the offending eigenvalue for
/// NegativeEigenvalue, the byte offset for parser errors, the multiplier norm
/// for BoundaryDetected. It is NaN when unused.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message, double value = std::numeric_limits<double>::quiet_NaN());

    ErrorCode code() const noexcept {
        return code_;
    }
    double value() const noexcept {
        return value_;
    }

   private:
    ErrorCode code_;
    double value_;
};

}  // namespace qmaxent

#endif

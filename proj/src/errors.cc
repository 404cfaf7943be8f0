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

#include "qmaxent/errors.h"

namespace qmaxent {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NonRealExpectation:
            return "NonRealExpectation";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::TraceNotOne:
            return "TraceNotOne";
        case ErrorCode::NegativeEigenvalue:
            return "NegativeEigenvalue";
        case ErrorCode::InvalidFamilyParameter:
            return "InvalidFamilyParameter";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::UnknownLevel:
            return "UnknownLevel";
        case ErrorCode::DuplicateObservable:
            return "DuplicateObservable";
        case ErrorCode::NotMember:
            return "NotMember";
        case ErrorCode::BoundaryDetected:
            return "BoundaryDetected";
        case ErrorCode::Infeasible:
            return "Infeasible";
        case ErrorCode::MaxIterations:
            return "MaxIterations";
        case ErrorCode::NoPhysicalPoint:
            return "NoPhysicalPoint";
        case ErrorCode::BlochNormExceeded:
            return "BlochNormExceeded";
        case ErrorCode::NonPhysicalMeans:
            return "NonPhysicalMeans";
        case ErrorCode::SyntaxError:
            return "SyntaxError";
        case ErrorCode::SiteOutOfRange:
            return "SiteOutOfRange";
        case ErrorCode::DuplicateSite:
            return "DuplicateSite";
        case ErrorCode::SchemaError:
            return "SchemaError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message, double value)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), value_(value) {
}

}  // namespace qmaxent

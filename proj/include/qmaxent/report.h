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

#ifndef QMAXENT_REPORT_H
#define QMAXENT_REPORT_H

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qmaxent/solver.h"

namespace qmaxent {

using Json = nlohmann::ordered_json;

struct MeasuredObservable {
    std::string expr;
    PauliString observable;
    double mean;
};

struct ReconstructionRequest {
    int n_spins = 0;
    std::vector<MeasuredObservable> observables;
    SolverOptions options;
    /// Informational registry key carried along from `expect`.
    std::optional<std::string> level;
};

/// Validates the request schema; every violation throws SchemaError (parse
/// errors of observable expressions keep their own codes).
ReconstructionRequest parse_request(const Json &doc);
ReconstructionRequest read_request(std::string_view text);

ConstraintSet request_constraints(const ReconstructionRequest &request);

/// Request document whose observables and means come from `c`.
Json request_json(const ConstraintSet &c, const Json &source = Json());

Json report_json(const ReconstructionResult &r, const ObservationLevel &level);

/// Deterministic text form: insertion-ordered keys, two-space indentation and
/// every floating-point value written with 17 significant digits.
std::string write_json(const Json &doc);

struct ReconstructionReport {
    int n_spins = 0;
    ComplexMatrix rho;
    double entropy = 0;
    double linear_entropy = 0;
    std::vector<double> eigenvalues;
    std::string method;
    std::optional<std::vector<double>> multipliers;
    std::vector<std::pair<std::string, double>> predicted;
    double residual = 0;
};

ReconstructionReport read_report(std::string_view text);

}  // namespace qmaxent

#endif

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

#ifndef QMAXENT_VERIFY_H
#define QMAXENT_VERIFY_H

#include <string>
#include <string_view>
#include <vector>

namespace qmaxent {

enum class Relation {
    /// |observed - expected| <= tolerance
    Near,
    /// observed <= expected
    AtMost,
    /// observed > expected
    Above,
};

struct CheckOutcome {
    std::string name;
    bool passed;
    double observed;
    double expected;
    double tolerance;
    Relation relation;
};

/// "bell", "ghz", "appendix", "single", "solver" and "all".
const std::vector<std::string> &verify_suite_names();

/// Runs a reproduction suite; throws InvalidArgument for an unknown name.
std::vector<CheckOutcome> run_verify_suite(std::string_view suite);

/// One line: PASS/FAIL, the name, observed and expected values.
std::string format_check(const CheckOutcome &check);

}  // namespace qmaxent

#endif

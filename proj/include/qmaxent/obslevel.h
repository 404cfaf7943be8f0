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

#ifndef QMAXENT_OBSLEVEL_H
#define QMAXENT_OBSLEVEL_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmaxent/density.h"

namespace qmaxent {

/// An ordered set of distinct, non-identity Pauli strings on n spins.
class ObservationLevel {
   public:
    ObservationLevel(int n, std::vector<PauliString> observables, std::string name = "", bool inferred = false);

    int spins() const noexcept {
        return n_;
    }
    const std::string &name() const noexcept {
        return name_;
    }
    /// Composition reconstructed from running text rather than an explicit list.
    bool inferred() const noexcept {
        return inferred_;
    }
    const std::vector<PauliString> &observables() const noexcept {
        return observables_;
    }
    std::size_t size() const noexcept {
        return observables_.size();
    }
    bool contains(const PauliString &s) const;
    std::optional<std::size_t> position(const PauliString &s) const;
    /// Same spin count and the same observables, ignoring order and name.
    bool same_observables(const ObservationLevel &other) const;
    bool is_subset_of(const ObservationLevel &other) const;

   private:
    int n_;
    std::vector<PauliString> observables_;
    std::string name_;
    bool inferred_;
};

/// Registered keys: A1 B1 C1, A2 B2 C2 D2 E2 G2 H2, B3 B3x B3y C3.
ObservationLevel named_level(std::string_view key);
const std::vector<std::string> &registered_level_keys();
/// Registry key of a level with the same observables, if any.
std::optional<std::string> identify_level(const ObservationLevel &level);
/// Chains of nested registered levels, smallest first.
const std::vector<std::vector<std::string>> &registered_chains();

ObservationLevel extend(const ObservationLevel &base, const std::vector<PauliString> &extra);
ObservationLevel reduce(const ObservationLevel &base, const std::vector<PauliString> &removed);

/// Measured means aligned with the level's observables.
class ConstraintSet {
   public:
    /// Throws DimensionMismatch on a length mismatch and InvalidArgument when
    /// a mean falls outside [-1, 1] (1e-12 slack).
    ConstraintSet(ObservationLevel level, std::vector<double> means);

    const ObservationLevel &level() const noexcept {
        return level_;
    }
    const std::vector<double> &means() const noexcept {
        return means_;
    }
    int spins() const noexcept {
        return level_.spins();
    }
    std::optional<double> mean_of(const PauliString &s) const;

   private:
    ObservationLevel level_;
    std::vector<double> means_;
};

ConstraintSet constraints_from_state(const DensityMatrix &rho, const ObservationLevel &level);

/// Largest |Tr(rho G) - G| over the constraint set.
double constraint_residual(const ComplexMatrix &rho, const ConstraintSet &c);

}  // namespace qmaxent

#endif

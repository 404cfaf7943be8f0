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

#include "qmaxent/obslevel.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "qmaxent/errors.h"

namespace qmaxent {

ObservationLevel::ObservationLevel(int n, std::vector<PauliString> observables, std::string name, bool inferred)
    : n_(n), observables_(std::move(observables)), name_(std::move(name)), inferred_(inferred) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "spin count must be positive");
    }
    std::set<PauliString> seen;
    for (const auto &s : observables_) {
        if (s.size() != n) {
            throw Error(ErrorCode::DimensionMismatch,
                        "observable " + s.letters() + " does not act on " + std::to_string(n) + " spins");
        }
        if (s.is_identity()) {
            throw Error(ErrorCode::InvalidArgument, "the identity is not an observable of a level");
        }
        if (!seen.insert(s).second) {
            throw Error(ErrorCode::DuplicateObservable, s.letters() + " appears twice");
        }
    }
}

bool ObservationLevel::contains(const PauliString &s) const {
    return position(s).has_value();
}

std::optional<std::size_t> ObservationLevel::position(const PauliString &s) const {
    auto it = std::find(observables_.begin(), observables_.end(), s);
    if (it == observables_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - observables_.begin());
}

bool ObservationLevel::same_observables(const ObservationLevel &other) const {
    return n_ == other.n_ && size() == other.size() && is_subset_of(other);
}

bool ObservationLevel::is_subset_of(const ObservationLevel &other) const {
    if (n_ != other.n_) {
        return false;
    }
    return std::all_of(observables_.begin(), observables_.end(), [&](const PauliString &s) {
        return other.contains(s);
    });
}

namespace {

struct RegistryEntry {
    int n;
    std::vector<const char *> letters;
    bool inferred;
};

const std::map<std::string, RegistryEntry, std::less<>> &registry() {
    static const std::map<std::string, RegistryEntry, std::less<>> entries = {
        {"A1", {1, {"Z"}, false}},
        {"B1", {1, {"Z", "X"}, false}},
        {"C1", {1, {"Z", "X", "Y"}, false}},
        {"A2", {2, {"ZI", "IZ"}, false}},
        {"B2", {2, {"ZI", "IZ", "ZZ"}, false}},
        {"C2", {2, {"ZI", "IZ", "ZZ", "IX"}, true}},
        {"D2", {2, {"ZI", "IZ", "ZZ", "IX", "IY"}, true}},
        {"E2", {2, {"ZZ", "XX"}, false}},
        {"G2", {2, {"ZZ", "XX", "XY", "YX", "YY"}, false}},
        {"H2", {2, {"XX", "XY", "YX", "YY"}, false}},
        {"B3", {3, {"ZZI", "IZZ"}, false}},
        {"B3x", {3, {"XXI", "IXX"}, false}},
        {"B3y", {3, {"YYI", "IYY"}, false}},
        {"C3", {3, {"ZZI", "IZZ", "XXX", "YYY"}, false}},
    };
    return entries;
}

}  // namespace

ObservationLevel named_level(std::string_view key) {
    const auto &reg = registry();
    auto it = reg.find(key);
    if (it == reg.end()) {
        throw Error(ErrorCode::UnknownLevel, "no registered level '" + std::string(key) + "'");
    }
    std::vector<PauliString> obs;
    for (const char *letters : it->second.letters) {
        obs.push_back(PauliString::from_letters(letters));
    }
    return ObservationLevel(it->second.n, std::move(obs), it->first, it->second.inferred);
}

const std::vector<std::string> &registered_level_keys() {
    static const std::vector<std::string> keys = {"A1", "B1", "C1", "A2", "B2", "C2",  "D2",
                                                  "E2", "G2", "H2", "B3", "B3x", "B3y", "C3"};
    return keys;
}

std::optional<std::string> identify_level(const ObservationLevel &level) {
    for (const auto &key : registered_level_keys()) {
        if (named_level(key).same_observables(level)) {
            return key;
        }
    }
    return std::nullopt;
}

const std::vector<std::vector<std::string>> &registered_chains() {
    static const std::vector<std::vector<std::string>> chains = {
        {"A1", "B1", "C1"}, {"A2", "B2", "C2", "D2"}, {"E2", "G2"}, {"H2", "G2"}, {"B3", "C3"},
    };
    return chains;
}

namespace {

ObservationLevel named_if_registered(int n, std::vector<PauliString> obs) {
    ObservationLevel level(n, std::move(obs));
    if (auto key = identify_level(level)) {
        auto reg = named_level(*key);
        return ObservationLevel(n, level.observables(), *key, reg.inferred());
    }
    return level;
}

}  // namespace

ObservationLevel extend(const ObservationLevel &base, const std::vector<PauliString> &extra) {
    std::vector<PauliString> obs = base.observables();
    for (const auto &s : extra) {
        if (std::find(obs.begin(), obs.end(), s) != obs.end()) {
            throw Error(ErrorCode::DuplicateObservable, s.letters() + " is already part of the level");
        }
        obs.push_back(s);
    }
    return named_if_registered(base.spins(), std::move(obs));
}

ObservationLevel reduce(const ObservationLevel &base, const std::vector<PauliString> &removed) {
    std::vector<PauliString> obs = base.observables();
    for (const auto &s : removed) {
        auto it = std::find(obs.begin(), obs.end(), s);
        if (it == obs.end()) {
            throw Error(ErrorCode::NotMember, s.letters() + " is not part of the level");
        }
        obs.erase(it);
    }
    return named_if_registered(base.spins(), std::move(obs));
}

ConstraintSet::ConstraintSet(ObservationLevel level, std::vector<double> means)
    : level_(std::move(level)), means_(std::move(means)) {
    if (means_.size() != level_.size()) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(means_.size()) + " means for " +
                                                      std::to_string(level_.size()) + " observables");
    }
    for (std::size_t i = 0; i < means_.size(); ++i) {
        if (!std::isfinite(means_[i]) || std::abs(means_[i]) > 1.0 + 1e-12) {
            throw Error(ErrorCode::InvalidArgument,
                        "mean of " + level_.observables()[i].letters() + " outside [-1, 1]", means_[i]);
        }
    }
}

std::optional<double> ConstraintSet::mean_of(const PauliString &s) const {
    if (auto pos = level_.position(s)) {
        return means_[*pos];
    }
    return std::nullopt;
}

ConstraintSet constraints_from_state(const DensityMatrix &rho, const ObservationLevel &level) {
    if (rho.spins() != level.spins()) {
        throw Error(ErrorCode::DimensionMismatch, "state and level act on different numbers of spins");
    }
    std::vector<double> means;
    means.reserve(level.size());
    for (const auto &s : level.observables()) {
        means.push_back(std::clamp(expectation(rho.matrix(), s), -1.0, 1.0));
    }
    return ConstraintSet(level, std::move(means));
}

double constraint_residual(const ComplexMatrix &rho, const ConstraintSet &c) {
    double worst = 0.0;
    const auto &obs = c.level().observables();
    for (std::size_t i = 0; i < obs.size(); ++i) {
        worst = std::max(worst, std::abs(expectation(rho, obs[i]) - c.means()[i]));
    }
    return worst;
}

}  // namespace qmaxent

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

#include <algorithm>
#include <set>
#include <string>

#include "qmaxent/closed_forms.h"
#include "qmaxent/errors.h"
#include "qmaxent/solver.h"

namespace qmaxent {

std::vector<PauliString> predicted_support(const ObservationLevel &level) {
    // Close the observables under the symmetrized product: commuting strings
    // multiply to another string, anticommuting ones contribute nothing.
    std::set<PauliString> closure(level.observables().begin(), level.observables().end());
    std::vector<PauliString> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<PauliString> added;
        std::vector<PauliString> members(closure.begin(), closure.end());
        for (const auto &a : frontier) {
            for (const auto &b : members) {
                if (a == b || !a.commutes_with(b)) {
                    continue;
                }
                PauliString p = multiply(a, b).string;
                if (!p.is_identity() && closure.insert(p).second) {
                    added.push_back(p);
                }
            }
        }
        frontier = std::move(added);
    }
    std::vector<PauliString> out;
    for (const auto &s : closure) {
        if (!level.contains(s)) {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const PauliString &a, const PauliString &b) { return a.index() < b.index(); });
    return out;
}

namespace {

[[noreturn]] void rethrow_as_infeasible(const Error &e) {
    throw Error(ErrorCode::Infeasible, std::string("no physical state matches the means: ") + e.what(), e.value());
}

ReconstructionResult primal_fallback(const ConstraintSet &c, const SolverOptions &opts) {
    std::vector<PauliString> support = predicted_support(c.level());
    if (support.empty()) {
        // The measured coefficients already fix everything the canonical
        // form can reach.
        ScanSpec spec;
        spec.positivity_tol = opts.scan.positivity_tol;
        try {
            return solve_primal_scan(c, spec);
        } catch (const Error &e) {
            if (e.code() == ErrorCode::NoPhysicalPoint) {
                rethrow_as_infeasible(e);
            }
            throw;
        }
    }
    if (support.size() <= 4) {
        ScanSpec spec = opts.scan;
        spec.free_coefficients = support;
        spec.bounds.clear();
        try {
            return solve_primal_scan(c, spec);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::NoPhysicalPoint) {
                throw;
            }
        }
    }
    return oracle_maxent(c);
}

}  // namespace

ReconstructionResult reconstruct(const ConstraintSet &c, const SolverOptions &opts) {
    if (!opts.disable_closed_forms) {
        try {
            if (auto r = try_closed_form(c)) {
                return *r;
            }
        } catch (const Error &e) {
            if (e.code() == ErrorCode::NonPhysicalMeans || e.code() == ErrorCode::BlochNormExceeded) {
                rethrow_as_infeasible(e);
            }
            throw;
        }
    }
    try {
        return solve_dual(c, opts);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::BoundaryDetected && e.code() != ErrorCode::MaxIterations) {
            throw;
        }
    }
    return primal_fallback(c, opts);
}

}  // namespace qmaxent

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

#ifndef QMAXENT_SOLVER_H
#define QMAXENT_SOLVER_H

#include <cstdint>
#include <utility>
#include <vector>

#include "qmaxent/result.h"

namespace qmaxent {

/// Box search over unmeasured Bloch coefficients. Every coefficient outside
/// the level and `free_coefficients` is held at zero.
struct ScanSpec {
    std::vector<PauliString> free_coefficients;
    /// Per-coefficient bounds; empty means [-1, 1] for all.
    std::vector<std::pair<double, double>> bounds;
    int coarse_resolution = 41;
    int refinement_rounds = 3;
    double shrink_factor = 0.2;
    /// Points per axis after the coarse round; 0 picks 41 up to two free
    /// coefficients and 21 beyond.
    int refine_resolution = 0;
    /// Extra shrink rounds allowed while no grid point is physical yet, which
    /// is how isolated physical points get located.
    int max_feasibility_rounds = 60;
    double positivity_tol = kPositivityTolerance;
};

struct SolverOptions {
    double residual_tol = 1e-9;
    int max_iter = 200;
    double multiplier_cap = 40.0;
    /// Newton steps must shrink below this before the dual counts as converged.
    double step_tol = 1e-7;
    bool disable_closed_forms = false;
    /// Grid settings for the primal fallback; its free set is filled in by
    /// `reconstruct`.
    ScanSpec scan;
};

struct DualState {
    Eigen::VectorXd multipliers;
    double partition;
};

/// ln Z and its derivatives at the given multipliers, for rho = exp(-sum l G)/Z.
struct DualEvaluation {
    double log_partition;
    /// <G_nu> under rho(lambda); equals -d ln Z / d lambda_nu.
    Eigen::VectorXd expectations;
    /// d^2 ln Z / d lambda_mu d lambda_nu (Kubo-Mori covariance).
    Eigen::MatrixXd hessian;
    ComplexMatrix rho;
    Eigen::VectorXd populations;
};

DualEvaluation evaluate_dual(const ObservationLevel &level, const Eigen::VectorXd &multipliers,
                             bool with_hessian = true);

/// Damped Newton on ln Z + lambda.G. Throws BoundaryDetected when a multiplier
/// exceeds the cap (the maximizer is rank deficient) and MaxIterations.
ReconstructionResult solve_dual(const ConstraintSet &c, const SolverOptions &opts = {});

/// Grid search with refinement. Throws NoPhysicalPoint when the box holds no
/// positive semidefinite candidate.
ReconstructionResult solve_primal_scan(const ConstraintSet &c, const ScanSpec &spec);

/// Strings that can carry a nonzero coefficient in the canonical form of the
/// level: the closure of its observables under products of commuting pairs,
/// minus the observables themselves and the identity. Basis order.
std::vector<PauliString> predicted_support(const ObservationLevel &level);

/// Closed form when one applies, else the dual, else the primal fallback.
ReconstructionResult reconstruct(const ConstraintSet &c, const SolverOptions &opts = {});

struct OracleOptions {
    /// Independent path-following runs from randomly perturbed starts.
    int starts = 3;
    std::uint64_t seed = 20261014;
    int max_newton = 60;
};

/// Brute-force primal maximization of the entropy over every unmeasured
/// Bloch coefficient. Follows the maximizer for the scaled means s * G from
/// s = 0 (maximally mixed) to s = 1 with Newton centering, positivity kept
/// by backtracking. Throws Infeasible.
ReconstructionResult oracle_maxent(const ConstraintSet &c, const OracleOptions &opts = {});

BlochExpansion predicted_means(const ReconstructionResult &r);

}  // namespace qmaxent

#endif

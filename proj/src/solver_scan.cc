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
#include <cmath>
#include <limits>
#include <string>

#include "qmaxent/errors.h"
#include "qmaxent/solver.h"

namespace qmaxent {

namespace {

// Positivity margin below which a feasibility search keeps homing in on an
// isolated physical point. The entropy ranking also only admits candidates
// this close to positive: with the looser validation tolerance the clamp
// would reward slightly negative spectra with spurious entropy.
constexpr double kFeasibilityTarget = 1e-13;
// Entropy differences below this count as a plateau.
constexpr double kEntropyTie = 1e-12;

struct Candidate {
    std::vector<double> point;
    double min_eigenvalue = -std::numeric_limits<double>::infinity();
    double entropy = -std::numeric_limits<double>::infinity();
    double norm = 0;
    bool valid = false;
};

class ScanProblem {
   public:
    ScanProblem(const ConstraintSet &c, const ScanSpec &spec) : n_(c.spins()) {
        auto dim = Eigen::Index{1} << n_;
        base_ = ComplexMatrix::Identity(dim, dim);
        const auto &obs = c.level().observables();
        for (std::size_t i = 0; i < obs.size(); ++i) {
            base_ += c.means()[i] * string_matrix(obs[i]);
        }
        for (const auto &s : spec.free_coefficients) {
            if (s.size() != n_ || s.is_identity()) {
                throw Error(ErrorCode::InvalidArgument, "free coefficient " + s.letters() + " is not a valid string");
            }
            if (c.level().contains(s)) {
                throw Error(ErrorCode::InvalidArgument, "free coefficient " + s.letters() + " is already measured");
            }
            free_.push_back(string_matrix(s));
        }
    }

    ComplexMatrix compose(const std::vector<double> &point) const {
        ComplexMatrix m = base_;
        for (std::size_t k = 0; k < point.size(); ++k) {
            m += point[k] * free_[k];
        }
        return m / static_cast<double>(base_.rows());
    }

    Candidate evaluate(const std::vector<double> &point, double threshold) const {
        Candidate out;
        out.point = point;
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(compose(point), Eigen::EigenvaluesOnly);
        const Eigen::VectorXd &ev = solver.eigenvalues();
        out.min_eigenvalue = ev.minCoeff();
        double sq = 0;
        for (double v : point) {
            sq += v * v;
        }
        out.norm = std::sqrt(sq);
        if (out.min_eigenvalue >= -threshold) {
            out.valid = true;
            std::vector<double> spectrum(ev.data(), ev.data() + ev.size());
            for (double &v : spectrum) {
                v = std::max(v, 0.0);
            }
            out.entropy = von_neumann_entropy_of_spectrum(spectrum);
        }
        return out;
    }

    int spins() const {
        return n_;
    }

   private:
    int n_;
    ComplexMatrix base_;
    std::vector<ComplexMatrix> free_;
};

bool better_entropy(const Candidate &a, const Candidate &b) {
    if (!a.valid) {
        return false;
    }
    if (!b.valid) {
        return true;
    }
    if (a.entropy > b.entropy + kEntropyTie) {
        return true;
    }
    if (a.entropy < b.entropy - kEntropyTie) {
        return false;
    }
    return a.norm < b.norm;
}

bool better_feasibility(const Candidate &a, const Candidate &b) {
    if (a.min_eigenvalue != b.min_eigenvalue) {
        return a.min_eigenvalue > b.min_eigenvalue;
    }
    return a.norm < b.norm;
}

struct Box {
    std::vector<double> lo;
    std::vector<double> hi;
};

struct RoundResult {
    Candidate best_entropy;
    Candidate best_feasibility;
    std::vector<double> spacing;
};

// Visits the tensor grid in row-major order; strict comparisons keep the
// earliest point among exact ties, so the outcome does not depend on
// anything but the grid itself.
RoundResult scan_round(const ScanProblem &problem, const Box &box, int resolution, double threshold) {
    std::size_t dims = box.lo.size();
    RoundResult out;
    std::vector<std::vector<double>> axes(dims);
    for (std::size_t k = 0; k < dims; ++k) {
        double lo = box.lo[k];
        double hi = box.hi[k];
        if (resolution == 1 || hi <= lo) {
            axes[k] = {0.5 * (lo + hi)};
            out.spacing.push_back(hi - lo);
            continue;
        }
        double step = (hi - lo) / (resolution - 1);
        for (int i = 0; i < resolution; ++i) {
            axes[k].push_back(i == resolution - 1 ? hi : lo + i * step);
        }
        out.spacing.push_back(step);
    }
    std::vector<std::size_t> counter(dims, 0);
    std::vector<double> point(dims);
    while (true) {
        for (std::size_t k = 0; k < dims; ++k) {
            point[k] = axes[k][counter[k]];
        }
        Candidate cand = problem.evaluate(point, threshold);
        if (better_entropy(cand, out.best_entropy)) {
            out.best_entropy = cand;
        }
        if (out.best_feasibility.point.empty() || better_feasibility(cand, out.best_feasibility)) {
            out.best_feasibility = cand;
        }
        std::size_t k = dims;
        while (k > 0) {
            --k;
            if (++counter[k] < axes[k].size()) {
                break;
            }
            counter[k] = 0;
            if (k == 0) {
                return out;
            }
        }
        if (dims == 0) {
            return out;
        }
    }
}

Box shrink_around(const std::vector<double> &center, const std::vector<double> &half_width, const Box &bounds) {
    Box box;
    for (std::size_t k = 0; k < center.size(); ++k) {
        box.lo.push_back(std::max(bounds.lo[k], center[k] - half_width[k]));
        box.hi.push_back(std::min(bounds.hi[k], center[k] + half_width[k]));
    }
    return box;
}

}  // namespace

ReconstructionResult solve_primal_scan(const ConstraintSet &c, const ScanSpec &spec) {
    std::size_t dims = spec.free_coefficients.size();
    if (dims > 4) {
        throw Error(ErrorCode::InvalidArgument,
                    "a primal scan supports at most 4 free coefficients, got " + std::to_string(dims));
    }
    if (spec.coarse_resolution < 1 || spec.refinement_rounds < 0 || !(spec.shrink_factor > 0) ||
        !(spec.shrink_factor < 1)) {
        throw Error(ErrorCode::InvalidArgument, "scan resolution, rounds or shrink factor out of range");
    }
    if (!spec.bounds.empty() && spec.bounds.size() != dims) {
        throw Error(ErrorCode::DimensionMismatch, "one bound pair per free coefficient is required");
    }
    ScanProblem problem(c, spec);

    Box bounds;
    for (std::size_t k = 0; k < dims; ++k) {
        auto [lo, hi] = spec.bounds.empty() ? std::pair{-1.0, 1.0} : spec.bounds[k];
        if (!(lo <= hi)) {
            throw Error(ErrorCode::InvalidArgument, "scan bound with lo > hi");
        }
        bounds.lo.push_back(lo);
        bounds.hi.push_back(hi);
    }
    int refine = spec.refine_resolution > 0 ? spec.refine_resolution : (dims <= 2 ? 41 : 21);

    RoundResult round = scan_round(problem, bounds, spec.coarse_resolution, kFeasibilityTarget);
    int rounds_done = 1;
    std::vector<double> half_width;
    for (std::size_t k = 0; k < dims; ++k) {
        half_width.push_back(0.5 * (bounds.hi[k] - bounds.lo[k]));
    }

    Candidate best = round.best_entropy;
    double threshold = kFeasibilityTarget;
    if (round.best_feasibility.min_eigenvalue < -kFeasibilityTarget) {
        // lambda_min moves by at most |dx|/2^n per coefficient, so the grid
        // bounds it on the whole box.
        double slack = 0;
        for (double h : round.spacing) {
            slack += 0.5 * h;
        }
        slack /= static_cast<double>(std::size_t{1} << problem.spins());
        if (round.best_feasibility.min_eigenvalue + slack < -spec.positivity_tol) {
            throw Error(ErrorCode::NoPhysicalPoint,
                        "no physical density matrix in the scan box (largest minimum eigenvalue " +
                            std::to_string(round.best_feasibility.min_eigenvalue) + ")",
                        round.best_feasibility.min_eigenvalue);
        }
        // Home in on the most positive point; this is how isolated physical
        // points are located.
        Candidate feasible = round.best_feasibility;
        for (int r = 0; r < spec.max_feasibility_rounds && feasible.min_eigenvalue < -kFeasibilityTarget; ++r) {
            for (double &h : half_width) {
                h *= spec.shrink_factor;
            }
            RoundResult next =
                scan_round(problem, shrink_around(feasible.point, half_width, bounds), refine, kFeasibilityTarget);
            ++rounds_done;
            if (better_feasibility(next.best_feasibility, feasible)) {
                feasible = next.best_feasibility;
            }
        }
        if (feasible.min_eigenvalue < -spec.positivity_tol) {
            throw Error(ErrorCode::NoPhysicalPoint,
                        "no physical density matrix found (largest minimum eigenvalue " +
                            std::to_string(feasible.min_eigenvalue) + ")",
                        feasible.min_eigenvalue);
        }
        threshold = std::max(kFeasibilityTarget, -feasible.min_eigenvalue);
        best = problem.evaluate(feasible.point, threshold);
    }

    for (int r = 0; r < spec.refinement_rounds; ++r) {
        for (double &h : half_width) {
            h *= spec.shrink_factor;
        }
        RoundResult next = scan_round(problem, shrink_around(best.point, half_width, bounds), refine, threshold);
        ++rounds_done;
        if (better_entropy(next.best_entropy, best)) {
            best = next.best_entropy;
        }
    }

    ReconstructionResult result = make_result(problem.compose(best.point), c, Method::PrimalScan, spec.positivity_tol);
    for (std::size_t k = 0; k < dims; ++k) {
        result.scan_point.emplace_back(spec.free_coefficients[k], best.point[k]);
    }
    result.iterations = rounds_done;
    return result;
}

}  // namespace qmaxent

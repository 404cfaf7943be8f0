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

// Brute-force primal maximizer used as an independent check on the dual
// solver. The entropy is maximized over every unmeasured Bloch coefficient by
// Newton's method while the means are scaled from zero (the maximally mixed
// state) up to their targets, so rank-deficient optima are approached from
// the interior.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "qmaxent/errors.h"
#include "qmaxent/solver.h"

namespace qmaxent {

namespace {

// Closest the path gets to the positivity boundary before extrapolating.
constexpr double kBoundaryEigenvalue = 1e-13;

// (ln a - ln b)/(a - b), the divided difference of the logarithm.
double log_divided_difference(double a, double b) {
    double r = (a - b) / b;
    if (std::abs(r) < 1e-5) {
        return (1 - r / 2 + r * r / 3) / b;
    }
    return std::log1p(r) / (a - b);
}

class PrimalPath {
   public:
    explicit PrimalPath(const ConstraintSet &c) : n_(c.spins()), dim_(Eigen::Index{1} << c.spins()) {
        measured_ = ComplexMatrix::Zero(dim_, dim_);
        const auto &obs = c.level().observables();
        for (std::size_t i = 0; i < obs.size(); ++i) {
            measured_ += c.means()[i] * string_matrix(obs[i]);
        }
        for (const auto &s : operator_basis(n_)) {
            if (!s.is_identity() && !c.level().contains(s)) {
                free_strings_.push_back(s);
                free_.push_back(string_matrix(s));
            }
        }
    }

    std::size_t dims() const {
        return free_.size();
    }
    const std::vector<PauliString> &free_strings() const {
        return free_strings_;
    }

    ComplexMatrix compose(double s, const Eigen::VectorXd &x) const {
        ComplexMatrix m = ComplexMatrix::Identity(dim_, dim_) + s * measured_;
        for (std::size_t k = 0; k < free_.size(); ++k) {
            m += x(static_cast<Eigen::Index>(k)) * free_[k];
        }
        return m / static_cast<double>(dim_);
    }

    double min_eigenvalue(double s, const Eigen::VectorXd &x) const {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(compose(s, x), Eigen::EigenvaluesOnly);
        return solver.eigenvalues().minCoeff();
    }

    // Entropy-maximizing coefficients at fixed scale s, starting from a
    // positive definite x. Returns nullopt when Newton fails to settle.
    std::optional<Eigen::VectorXd> correct(double s, Eigen::VectorXd x, int max_newton) const {
        auto m = static_cast<Eigen::Index>(free_.size());
        if (m == 0) {
            return x;
        }
        for (int iter = 0; iter < max_newton; ++iter) {
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(compose(s, x));
            const Eigen::VectorXd &mu = solver.eigenvalues();
            if (mu.minCoeff() <= 0) {
                return std::nullopt;
            }
            const ComplexMatrix &u = solver.eigenvectors();
            Eigen::VectorXd log_mu = mu.array().log();
            double entropy = -(mu.array() * log_mu.array()).sum();
            std::vector<ComplexMatrix> rotated;
            rotated.reserve(free_.size());
            Eigen::VectorXd grad(m);
            for (Eigen::Index k = 0; k < m; ++k) {
                rotated.push_back(u.adjoint() * free_[static_cast<std::size_t>(k)] * u);
                // dS/dx_k = -Tr(ln rho Q_k)/d.
                grad(k) = -(rotated.back().diagonal().real().array() * log_mu.array()).sum() /
                          static_cast<double>(dim_);
            }
            Eigen::MatrixXd weight(dim_, dim_);
            for (Eigen::Index i = 0; i < dim_; ++i) {
                for (Eigen::Index j = 0; j < dim_; ++j) {
                    weight(i, j) = log_divided_difference(mu(i), mu(j));
                }
            }
            // Negative Hessian of S (positive definite).
            Eigen::MatrixXd curvature(m, m);
            double scale = 1.0 / static_cast<double>(dim_ * dim_);
            for (Eigen::Index a = 0; a < m; ++a) {
                for (Eigen::Index b = a; b < m; ++b) {
                    const ComplexMatrix &qa = rotated[static_cast<std::size_t>(a)];
                    const ComplexMatrix &qb = rotated[static_cast<std::size_t>(b)];
                    double v = scale * (qa.conjugate().cwiseProduct(qb).real().array() * weight.array()).sum();
                    curvature(a, b) = v;
                    curvature(b, a) = v;
                }
            }
            Eigen::VectorXd step = curvature.ldlt().solve(grad);
            double decrement = grad.dot(step);
            if (!std::isfinite(decrement)) {
                return std::nullopt;
            }
            if (decrement < 1e-26 || step.cwiseAbs().maxCoeff() < 1e-15) {
                return x;
            }
            double alpha = 1.0;
            bool moved = false;
            for (int k = 0; k < 60; ++k) {
                Eigen::VectorXd trial = x + alpha * step;
                Eigen::SelfAdjointEigenSolver<ComplexMatrix> t(compose(s, trial), Eigen::EigenvaluesOnly);
                const Eigen::VectorXd &tmu = t.eigenvalues();
                if (tmu.minCoeff() > 0) {
                    double t_entropy = -(tmu.array() * tmu.array().log()).sum();
                    if (t_entropy >= entropy + 1e-4 * alpha * decrement - 1e-15 * (1 + entropy)) {
                        x = trial;
                        moved = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
            if (!moved) {
                // Stuck at rounding level: accept only if already converged.
                return decrement < 1e-20 ? std::optional<Eigen::VectorXd>(x) : std::nullopt;
            }
        }
        return std::nullopt;
    }

   private:
    int n_;
    Eigen::Index dim_;
    ComplexMatrix measured_;
    std::vector<PauliString> free_strings_;
    std::vector<ComplexMatrix> free_;
};

struct PathEnd {
    double s;
    Eigen::VectorXd x;
    std::optional<std::pair<double, Eigen::VectorXd>> previous;
};

PathEnd follow_path(const PrimalPath &path, Eigen::VectorXd x, const OracleOptions &opts) {
    auto corrected = path.correct(0.0, x, opts.max_newton);
    if (!corrected) {
        corrected = path.correct(0.0, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(path.dims())), opts.max_newton);
    }
    PathEnd end{0.0, *corrected, std::nullopt};
    double ds = 0.05;
    while (end.s < 1.0 && ds >= 1e-15) {
        double s_new = std::min(1.0, end.s + ds);
        Eigen::VectorXd guess = end.x;
        if (end.previous) {
            // Secant predictor along the path.
            double span = end.s - end.previous->first;
            guess = end.x + (s_new - end.s) / span * (end.x - end.previous->second);
        }
        if (path.min_eigenvalue(s_new, guess) <= 0) {
            guess = end.x;
        }
        std::optional<Eigen::VectorXd> next;
        if (path.min_eigenvalue(s_new, guess) > 0) {
            next = path.correct(s_new, guess, opts.max_newton);
        }
        if (!next) {
            ds *= 0.5;
            continue;
        }
        end.previous = std::pair{end.s, end.x};
        end.s = s_new;
        end.x = *next;
        if (path.min_eigenvalue(end.s, end.x) < kBoundaryEigenvalue) {
            break;
        }
        ds = std::min(2 * ds, 0.25);
    }
    return end;
}

// Projects onto the positive cone and restores unit trace.
ComplexMatrix clamp_to_physical(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    Eigen::VectorXd ev = solver.eigenvalues().cwiseMax(0.0);
    ev /= ev.sum();
    ComplexMatrix out = solver.eigenvectors() * ev.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
    return (out + out.adjoint()) / 2.0;
}

}  // namespace

ReconstructionResult oracle_maxent(const ConstraintSet &c, const OracleOptions &opts) {
    PrimalPath path(c);
    auto m = static_cast<Eigen::Index>(path.dims());
    std::optional<ReconstructionResult> best;
    double closest = 0;
    for (int start = 0; start < std::max(1, opts.starts); ++start) {
        std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(start));
        std::uniform_real_distribution<double> jitter(-1.0, 1.0);
        Eigen::VectorXd x0 = Eigen::VectorXd::Zero(m);
        if (start > 0) {
            // Random positive-definite starting point at zero scale.
            for (Eigen::Index k = 0; k < m; ++k) {
                x0(k) = 0.5 * jitter(rng) / static_cast<double>(std::max<Eigen::Index>(m, 1));
            }
        }
        PathEnd end = follow_path(path, x0, opts);
        closest = std::max(closest, end.s);
        if (1.0 - end.s > 1e-6) {
            continue;
        }
        Eigen::VectorXd x = end.x;
        if (end.s < 1.0 && end.previous) {
            double span = end.s - end.previous->first;
            Eigen::VectorXd extrapolated = end.x + (1.0 - end.s) / span * (end.x - end.previous->second);
            if (path.min_eigenvalue(1.0, extrapolated) >= -1e-8) {
                x = extrapolated;
            }
        }
        ComplexMatrix rho = path.compose(1.0, x);
        if (Eigen::SelfAdjointEigenSolver<ComplexMatrix>(rho, Eigen::EigenvaluesOnly).eigenvalues().minCoeff() <
            -1e-6) {
            continue;
        }
        ReconstructionResult r = make_result(clamp_to_physical(rho), c, Method::Oracle);
        if (!best || r.entropy > best->entropy) {
            best = std::move(r);
        }
    }
    if (!best) {
        throw Error(ErrorCode::Infeasible,
                    "no physical state matches the means (path stalled at scale " + std::to_string(closest) + ")",
                    closest);
    }
    return *best;
}

}  // namespace qmaxent

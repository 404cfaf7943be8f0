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

#include <cmath>
#include <string>

#include "qmaxent/errors.h"
#include "qmaxent/solver.h"

namespace qmaxent {

namespace {

// Weight (p_i - p_j) / (e_j - e_i) of the Kubo-Mori inner product, written
// so that nearly degenerate levels do not cancel.
double kubo_mori_weight(double p_i, double e_i, double p_j, double e_j) {
    double gap = e_j - e_i;
    if (gap < 0) {
        std::swap(p_i, p_j);
        gap = -gap;
    }
    if (gap < 1e-300) {
        return p_i;
    }
    return p_i * (-std::expm1(-gap)) / gap;
}

std::vector<ComplexMatrix> observable_matrices(const ObservationLevel &level) {
    std::vector<ComplexMatrix> mats;
    mats.reserve(level.size());
    for (const auto &s : level.observables()) {
        mats.push_back(string_matrix(s));
    }
    return mats;
}

DualEvaluation evaluate(const std::vector<ComplexMatrix> &mats, int n, const Eigen::VectorXd &lambda,
                        bool with_hessian) {
    auto dim = Eigen::Index{1} << n;
    ComplexMatrix exponent = ComplexMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < mats.size(); ++k) {
        exponent += lambda(static_cast<Eigen::Index>(k)) * mats[k];
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(exponent);
    const Eigen::VectorXd &energies = solver.eigenvalues();
    const ComplexMatrix &u = solver.eigenvectors();
    double shift = energies.minCoeff();
    Eigen::VectorXd weights = (-(energies.array() - shift)).exp();
    double z_shifted = weights.sum();

    DualEvaluation out;
    out.log_partition = -shift + std::log(z_shifted);
    out.populations = weights / z_shifted;
    out.rho = u * out.populations.cast<Complex>().asDiagonal() * u.adjoint();
    out.rho = (out.rho + out.rho.adjoint()) / 2.0;

    auto m = static_cast<Eigen::Index>(mats.size());
    std::vector<ComplexMatrix> rotated;
    rotated.reserve(mats.size());
    out.expectations.resize(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        rotated.push_back(u.adjoint() * mats[static_cast<std::size_t>(k)] * u);
        out.expectations(k) = (rotated.back().diagonal().real().array() * out.populations.array()).sum();
    }
    if (!with_hessian) {
        return out;
    }
    Eigen::MatrixXd weight(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            weight(i, j) = kubo_mori_weight(out.populations(i), energies(i), out.populations(j), energies(j));
        }
    }
    out.hessian.resize(m, m);
    for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = a; b < m; ++b) {
            const ComplexMatrix &ga = rotated[static_cast<std::size_t>(a)];
            const ComplexMatrix &gb = rotated[static_cast<std::size_t>(b)];
            double acc = (ga.conjugate().cwiseProduct(gb).real().array() * weight.array()).sum();
            acc -= out.expectations(a) * out.expectations(b);
            out.hessian(a, b) = acc;
            out.hessian(b, a) = acc;
        }
    }
    return out;
}

}  // namespace

DualEvaluation evaluate_dual(const ObservationLevel &level, const Eigen::VectorXd &multipliers, bool with_hessian) {
    if (multipliers.size() != static_cast<Eigen::Index>(level.size())) {
        throw Error(ErrorCode::DimensionMismatch, "one multiplier per observable is required");
    }
    return evaluate(observable_matrices(level), level.spins(), multipliers, with_hessian);
}

ReconstructionResult solve_dual(const ConstraintSet &c, const SolverOptions &opts) {
    const auto &level = c.level();
    auto mats = observable_matrices(level);
    auto m = static_cast<Eigen::Index>(level.size());
    Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(c.means().data(), m);
    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(m);

    for (int iter = 0; iter <= opts.max_iter; ++iter) {
        DualEvaluation ev = evaluate(mats, level.spins(), lambda, true);
        Eigen::VectorXd grad = target - ev.expectations;
        double objective = ev.log_partition + lambda.dot(target);
        Eigen::MatrixXd hess = ev.hessian + 1e-12 * Eigen::MatrixXd::Identity(m, m);
        Eigen::VectorXd step = m > 0 ? Eigen::VectorXd(-hess.ldlt().solve(grad)) : Eigen::VectorXd();
        double residual = m > 0 ? grad.cwiseAbs().maxCoeff() : 0.0;
        double step_norm = m > 0 ? step.cwiseAbs().maxCoeff() : 0.0;

        if (residual <= opts.residual_tol && step_norm <= opts.step_tol) {
            ReconstructionResult r = make_result(ev.rho, c, Method::Dual);
            r.multipliers = lambda;
            r.partition = std::exp(ev.log_partition);
            r.iterations = iter;
            return r;
        }
        // Means matched to rounding while the Newton direction still runs off
        // along a numerically empty subspace: the multipliers only grow
        // logarithmically from here, so report the boundary directly.
        if (residual <= opts.residual_tol && ev.populations.minCoeff() < kPositivityTolerance) {
            throw Error(ErrorCode::BoundaryDetected,
                        "means matched by a rank-deficient state; the multipliers diverge",
                        lambda.cwiseAbs().maxCoeff());
        }
        if (iter == opts.max_iter) {
            break;
        }

        // Backtracking on the dual objective. Far out along a divergent
        // direction the decrease drops below rounding, hence the slack.
        double slope = grad.dot(step);
        double alpha = 1.0;
        Eigen::VectorXd next = lambda + step;
        for (int k = 0; k < 60; ++k) {
            next = lambda + alpha * step;
            DualEvaluation trial = evaluate(mats, level.spins(), next, false);
            double value = trial.log_partition + next.dot(target);
            if (value <= objective + 1e-4 * alpha * slope + 1e-13 * (1.0 + std::abs(objective))) {
                break;
            }
            alpha *= 0.5;
        }
        lambda = next;
        double lambda_norm = lambda.cwiseAbs().maxCoeff();
        if (lambda_norm > opts.multiplier_cap) {
            throw Error(ErrorCode::BoundaryDetected,
                        "multiplier magnitude " + std::to_string(lambda_norm) + " exceeds the cap; the maximizer is "
                        "rank deficient",
                        lambda_norm);
        }
    }
    throw Error(ErrorCode::MaxIterations, "dual Newton did not converge in " + std::to_string(opts.max_iter) +
                                              " iterations");
}

BlochExpansion predicted_means(const ReconstructionResult &r) {
    return bloch_decompose(r.rho.matrix());
}

}  // namespace qmaxent

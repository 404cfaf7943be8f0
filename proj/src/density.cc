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

#include "qmaxent/density.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qmaxent/errors.h"

namespace qmaxent {

double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "matrices of different shape");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    auto dim = Eigen::Index{1} << n;
    return validate(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix validate(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "density matrix must be square");
    }
    int n = spins_for_dimension(m.rows());
    double defect = hermiticity_defect(m);
    if (defect > kHermitianTolerance) {
        throw Error(ErrorCode::NotHermitian, "max |m - m^dagger| = " + std::to_string(defect), defect);
    }
    Complex trace = m.trace();
    if (std::abs(trace - Complex{1, 0}) > kTraceTolerance) {
        throw Error(ErrorCode::TraceNotOne, "trace = " + std::to_string(trace.real()), trace.real());
    }
    ComplexMatrix herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
    double lambda_min = solver.eigenvalues().minCoeff();
    if (lambda_min < -tol) {
        throw Error(ErrorCode::NegativeEigenvalue, "minimum eigenvalue " + std::to_string(lambda_min), lambda_min);
    }
    if (lambda_min < 0.0) {
        Eigen::VectorXd clamped = solver.eigenvalues().cwiseMax(0.0);
        clamped /= clamped.sum();
        const ComplexMatrix &u = solver.eigenvectors();
        herm = u * clamped.cast<Complex>().asDiagonal() * u.adjoint();
        herm = (herm + herm.adjoint()) / 2.0;
    }
    return DensityMatrix(std::move(herm), n);
}

double von_neumann_entropy_of_spectrum(const std::vector<double> &eigenvalues) {
    double s = 0.0;
    for (double p : eigenvalues) {
        if (p > 0.0) {
            s -= p * std::log(p);
        }
    }
    return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return von_neumann_entropy_of_spectrum(rho.eigenvalues());
}

double linear_entropy(const DensityMatrix &rho) {
    // Tr(rho^2) for Hermitian rho is the squared Frobenius norm.
    return 1.0 - rho.matrix().squaredNorm();
}

EntropyReport entropy_report(const DensityMatrix &rho) {
    EntropyReport report;
    report.eigenvalues = rho.eigenvalues();
    report.von_neumann = von_neumann_entropy_of_spectrum(report.eigenvalues);
    report.linear = linear_entropy(rho);
    return report;
}

ComplexMatrix exp_hermitian(const ComplexMatrix &h) {
    if (h.rows() != h.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "exponent must be square");
    }
    double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    double defect = hermiticity_defect(h);
    if (defect > kHermitianTolerance * scale) {
        throw Error(ErrorCode::NotHermitian, "exponent is not Hermitian, defect " + std::to_string(defect), defect);
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((h + h.adjoint()) / 2.0);
    Eigen::VectorXd e = solver.eigenvalues().array().exp();
    const ComplexMatrix &u = solver.eigenvectors();
    ComplexMatrix out = u * e.cast<Complex>().asDiagonal() * u.adjoint();
    return (out + out.adjoint()) / 2.0;
}

}  // namespace qmaxent

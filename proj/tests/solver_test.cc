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

#include "qmaxent/solver.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "qmaxent/states.h"
#include "test_util.h"

namespace qmaxent {
namespace {

using testing::kLn2;
using testing::kPi;
using testing::max_norm;
using testing::throws_code;

PauliString ps(const char *s) { return PauliString::from_letters(s); }

std::vector<std::string> letters(const std::vector<PauliString> &v) {
    std::vector<std::string> out;
    for (const auto &s : v) {
        out.push_back(s.letters());
    }
    return out;
}

SolverOptions generic_only() {
    SolverOptions opts;
    opts.disable_closed_forms = true;
    return opts;
}

TEST(EvaluateDual, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(101);
    std::normal_distribution<double> g(0.0, 0.7);
    for (const char *key : {"B1", "A2", "G2", "E2", "C3"}) {
        ObservationLevel level = named_level(key);
        for (int trial = 0; trial < 5; ++trial) {
            Eigen::VectorXd lambda(static_cast<Eigen::Index>(level.size()));
            for (auto &v : lambda) {
                v = g(rng);
            }
            DualEvaluation at = evaluate_dual(level, lambda);
            const double step = 1e-5;
            for (Eigen::Index i = 0; i < lambda.size(); ++i) {
                Eigen::VectorXd up = lambda;
                Eigen::VectorXd down = lambda;
                up(i) += step;
                down(i) -= step;
                double fd = -(evaluate_dual(level, up, false).log_partition -
                              evaluate_dual(level, down, false).log_partition) /
                            (2 * step);
                EXPECT_NEAR(fd, at.expectations(i), 1e-6 * std::max(1.0, std::abs(fd))) << key;
                Eigen::VectorXd dfd = (evaluate_dual(level, up, false).expectations -
                                       evaluate_dual(level, down, false).expectations) /
                                      (2 * step);
                for (Eigen::Index j = 0; j < lambda.size(); ++j) {
                    EXPECT_NEAR(-dfd(j), at.hessian(j, i), 1e-6 * std::max(1.0, std::abs(dfd(j)))) << key;
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(at.hessian);
            EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
        }
    }
}

TEST(EvaluateDual, RejectsWrongLength) {
    EXPECT_TRUE(throws_code([] { evaluate_dual(named_level("G2"), Eigen::VectorXd::Zero(3)); },
                            ErrorCode::DimensionMismatch));
}

TEST(SolveDual, SingleSpinExample) {
    ReconstructionResult r = solve_dual(ConstraintSet(named_level("A1"), {0.6}));
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = 0.8;
    expected(1, 1) = 0.2;
    EXPECT_LT(max_norm(r.rho.matrix(), expected), 1e-9);
    EXPECT_NEAR(r.entropy, testing::binary_entropy(0.8), 1e-9);
    EXPECT_NEAR((*r.multipliers)(0), -std::atanh(0.6), 1e-8);
    EXPECT_EQ(r.method, Method::Dual);
    EXPECT_LE(r.residual, 1e-9);
}

TEST(SolveDual, ZeroMeansGiveMaximallyMixed) {
    ReconstructionResult r = solve_dual(ConstraintSet(named_level("G2"), {0, 0, 0, 0, 0}));
    EXPECT_LT(max_norm(r.rho.matrix(), ComplexMatrix::Identity(4, 4) / 4.0), 1e-12);
    EXPECT_NEAR(r.entropy, 2 * kLn2, 1e-12);
    EXPECT_LT(r.multipliers->lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(SolveDual, PureStateIsABoundary) {
    ConstraintSet c = constraints_from_state(bell(0.4).density(), named_level("G2"));
    EXPECT_TRUE(throws_code([&] { solve_dual(c); }, ErrorCode::BoundaryDetected));
}

TEST(SolveDual, DualIdentityAndResidual) {
    std::mt19937_64 rng(103);
    for (const char *key : {"C1", "A2", "D2", "G2", "B3"}) {
        ObservationLevel level = named_level(key);
        for (int trial = 0; trial < 5; ++trial) {
            ConstraintSet c = constraints_from_state(random_mixed_state(level.spins(), rng), level);
            ReconstructionResult r = solve_dual(c);
            double dual = std::log(*r.partition);
            for (std::size_t i = 0; i < c.means().size(); ++i) {
                dual += (*r.multipliers)(static_cast<Eigen::Index>(i)) * c.means()[i];
            }
            EXPECT_NEAR(dual, r.entropy, 1e-8) << key;
            EXPECT_LE(r.residual, 1e-9) << key;
        }
    }
}

TEST(SolveDual, CustomLevel) {
    ObservationLevel level(2, {ps("ZX")});
    ReconstructionResult r = reconstruct(ConstraintSet(level, {0.4}));
    EXPECT_EQ(r.method, Method::Dual);
    ComplexMatrix expected = (ComplexMatrix::Identity(4, 4) + 0.4 * testing::literal_string("ZX")) / 4.0;
    EXPECT_LT(max_norm(r.rho.matrix(), expected), 1e-9);
}

TEST(PredictedSupport, RegisteredLevels) {
    using V = std::vector<std::string>;
    EXPECT_EQ(letters(predicted_support(named_level("H2"))), V{"ZZ"});
    EXPECT_EQ(letters(predicted_support(named_level("E2"))), V{"YY"});
    EXPECT_EQ(letters(predicted_support(named_level("C2"))), V{"ZX"});
    EXPECT_EQ(letters(predicted_support(named_level("D2"))), (V{"ZX", "ZY"}));
    EXPECT_TRUE(predicted_support(named_level("B2")).empty());
    EXPECT_TRUE(predicted_support(named_level("G2")).empty());
    EXPECT_EQ(letters(predicted_support(named_level("B3"))), V{"ZIZ"});
    EXPECT_EQ(predicted_support(named_level("C3")).size(), 7u);
}

TEST(PrimalScan, BellFromH2) {
    ScanSpec spec;
    spec.free_coefficients = {ps("ZZ")};
    ConstraintSet c = constraints_from_state(bell(0.7).density(), named_level("H2"));
    ReconstructionResult r = solve_primal_scan(c, spec);
    EXPECT_EQ(r.method, Method::PrimalScan);
    EXPECT_NEAR(r.scan_point.at(0).second, 1.0, 1e-12);
    EXPECT_LT(max_norm(r.rho.matrix(), bell(0.7).density().matrix()), 1e-9);
}

TEST(PrimalScan, ZeroMeansOfE2) {
    ScanSpec spec;
    spec.free_coefficients = {ps("YY")};
    ReconstructionResult r = solve_primal_scan(ConstraintSet(named_level("E2"), {0, 0}), spec);
    EXPECT_NEAR(r.scan_point.at(0).second, 0.0, 1e-12);
    EXPECT_NEAR(r.entropy, 2 * kLn2, 1e-12);
}

TEST(PrimalScan, InteriorOptimum) {
    ScanSpec spec;
    spec.free_coefficients = {ps("ZZ")};
    ReconstructionResult r = solve_primal_scan(ConstraintSet(named_level("H2"), {0.5, 0.0, 0.0, 0.3}), spec);
    EXPECT_NEAR(r.scan_point.at(0).second, -0.15, 1e-3);
}

TEST(PrimalScan, NoPhysicalPoint) {
    ScanSpec spec;
    spec.free_coefficients = {ps("ZZ")};
    EXPECT_TRUE(throws_code([&] { solve_primal_scan(ConstraintSet(named_level("H2"), {1, 1, 0, 0}), spec); },
                            ErrorCode::NoPhysicalPoint));
}

TEST(PrimalScan, InvalidSpecs) {
    ConstraintSet c(named_level("E2"), {0, 0});
    ScanSpec measured;
    measured.free_coefficients = {ps("XX")};
    EXPECT_TRUE(throws_code([&] { solve_primal_scan(c, measured); }, ErrorCode::InvalidArgument));
    ScanSpec too_many;
    too_many.free_coefficients = {ps("XY"), ps("YX"), ps("YY"), ps("ZI"), ps("IZ")};
    EXPECT_TRUE(throws_code([&] { solve_primal_scan(c, too_many); }, ErrorCode::InvalidArgument));
    ScanSpec bad;
    bad.free_coefficients = {ps("YY")};
    bad.shrink_factor = 1.5;
    EXPECT_TRUE(throws_code([&] { solve_primal_scan(c, bad); }, ErrorCode::InvalidArgument));
}

TEST(PrimalScan, Deterministic) {
    ScanSpec spec;
    spec.free_coefficients = {ps("ZZ")};
    ConstraintSet c(named_level("H2"), {0.3, -0.2, 0.5, 0.1});
    ReconstructionResult a = solve_primal_scan(c, spec);
    ReconstructionResult b = solve_primal_scan(c, spec);
    EXPECT_EQ(a.entropy, b.entropy);
    EXPECT_EQ(max_norm(a.rho.matrix(), b.rho.matrix()), 0.0);
}

TEST(Reconstruct, MethodSelection) {
    EXPECT_EQ(reconstruct(constraints_from_state(bell(0.3).density(), named_level("G2"))).method,
              Method::ClosedForm);
    EXPECT_EQ(reconstruct(ConstraintSet(named_level("A1"), {0.6})).method, Method::ClosedForm);
    ReconstructionResult e2 = reconstruct(constraints_from_state(bell(0).density(), named_level("E2")));
    EXPECT_EQ(e2.method, Method::PrimalScan);
    EXPECT_LT(max_norm(e2.rho.matrix(), bell(0).density().matrix()), 1e-9);
    ReconstructionResult g2 = reconstruct(constraints_from_state(bell(0.3).density(), named_level("G2")),
                                          generic_only());
    EXPECT_EQ(g2.method, Method::PrimalScan);
    EXPECT_LT(g2.entropy, 1e-9);
}

TEST(Reconstruct, InfeasibleMeans) {
    ConstraintSet c(named_level("H2"), {1, 1, 0, 0});
    EXPECT_TRUE(throws_code([&] { reconstruct(c); }, ErrorCode::Infeasible));
    EXPECT_TRUE(throws_code([&] { reconstruct(c, generic_only()); }, ErrorCode::Infeasible));
    EXPECT_TRUE(throws_code([] { reconstruct(ConstraintSet(named_level("C1"), {0.8, 0.8, 0})); },
                            ErrorCode::Infeasible));
}

TEST(Oracle, BellFromE2) {
    ConstraintSet c = constraints_from_state(bell(0).density(), named_level("E2"));
    ReconstructionResult r = oracle_maxent(c);
    EXPECT_EQ(r.method, Method::Oracle);
    EXPECT_LT(max_norm(r.rho.matrix(), bell(0).density().matrix()), 1e-5);
    ReconstructionResult quarter = oracle_maxent(constraints_from_state(bell(kPi / 2).density(), named_level("E2")));
    EXPECT_NEAR(quarter.entropy, kLn2, 1e-5);
}

TEST(Oracle, AgreesWithDualOnInteriorInstances) {
    std::mt19937_64 rng(107);
    for (const char *key : {"C1", "B2", "E2", "H2"}) {
        ObservationLevel level = named_level(key);
        for (int trial = 0; trial < 5; ++trial) {
            ConstraintSet c = constraints_from_state(random_mixed_state(level.spins(), rng), level);
            ReconstructionResult dual = solve_dual(c);
            ReconstructionResult oracle = oracle_maxent(c);
            EXPECT_LT(max_norm(dual.rho.matrix(), oracle.rho.matrix()), 1e-5) << key;
            EXPECT_NEAR(dual.entropy, oracle.entropy, 1e-6) << key;
        }
    }
}

TEST(Oracle, Infeasible) {
    EXPECT_TRUE(throws_code([] { oracle_maxent(ConstraintSet(named_level("H2"), {1, 1, 0, 0})); },
                            ErrorCode::Infeasible));
}

TEST(PredictedMeans, Examples) {
    BlochExpansion b3 = predicted_means(reconstruct(ConstraintSet(named_level("B3"), {1, 1})));
    EXPECT_NEAR(b3.coefficient(ps("ZIZ")), 1.0, 1e-12);
    BlochExpansion h2 = predicted_means(reconstruct(constraints_from_state(bell(1.0).density(), named_level("H2"))));
    EXPECT_NEAR(h2.coefficient(ps("ZZ")), 1.0, 1e-9);
    ReconstructionResult product = reconstruct(ConstraintSet(named_level("A2"), {0.4, -0.5}));
    EXPECT_NEAR(predicted_means(product).coefficient(ps("ZZ")), -0.2, 1e-9);
}

TEST(Reconstruct, EntropyDecreasesWithMoreConstraints) {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 10; ++trial) {
        DensityMatrix rho = random_mixed_state(2, rng);
        double previous = 2 * kLn2 + 1e-9;
        for (const char *key : {"A2", "B2", "C2", "D2"}) {
            double s = reconstruct(constraints_from_state(rho, named_level(key))).entropy;
            EXPECT_LE(s, previous + 1e-6) << key;
            previous = s;
        }
        EXPECT_GE(previous, von_neumann_entropy(rho) - 1e-6);
    }
}

}  // namespace
}  // namespace qmaxent

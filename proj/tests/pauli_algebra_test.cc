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

#include "qmaxent/pauli_algebra.h"

#include <gtest/gtest.h>

#include <map>

#include "qmaxent/density.h"
#include "qmaxent/states.h"
#include "test_util.h"

namespace qmaxent {
namespace {

using testing::literal_string;
using testing::max_norm;
using testing::throws_code;

TEST(PauliMatrix, StandardMatrices) {
    for (auto [axis, letter] : {std::pair{Axis::I, 'I'}, {Axis::X, 'X'}, {Axis::Y, 'Y'}, {Axis::Z, 'Z'}}) {
        EXPECT_EQ(max_norm(pauli_matrix(axis), testing::literal_pauli(letter)), 0.0) << letter;
    }
    ComplexMatrix z = pauli_matrix(Axis::Z);
    EXPECT_EQ(z(0, 0), Complex(1));
    EXPECT_EQ(z(1, 1), Complex(-1));
}

TEST(StringMatrix, MatchesExplicitKroneckerProducts) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto &s : operator_basis(n)) {
            EXPECT_EQ(max_norm(string_matrix(s), literal_string(s.letters())), 0.0) << s.letters();
        }
    }
}

TEST(StringMatrix, ZZIsDiagonal) {
    ComplexMatrix m = string_matrix(PauliString::from_letters("ZZ"));
    Eigen::Vector4cd expected(1, -1, -1, 1);
    EXPECT_EQ(max_norm(m, expected.asDiagonal().toDenseMatrix()), 0.0);
}

TEST(StringMatrix, XYHasImaginaryAntidiagonal) {
    const Complex i(0, 1);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 3) = -i;
    expected(1, 2) = i;
    expected(2, 1) = -i;
    expected(3, 0) = i;
    EXPECT_EQ(max_norm(string_matrix(PauliString::from_letters("XY")), expected), 0.0);
}

TEST(StringMatrix, IdentityString) {
    EXPECT_EQ(max_norm(string_matrix(PauliString::identity(2)), ComplexMatrix::Identity(4, 4)), 0.0);
}

TEST(StringMatrix, SquaresToIdentityAndIsHermitian) {
    for (const auto &s : operator_basis(3)) {
        ComplexMatrix m = string_matrix(s);
        EXPECT_LT(max_norm(m * m, ComplexMatrix::Identity(8, 8)), 1e-15) << s.letters();
        EXPECT_EQ(max_norm(m, m.adjoint()), 0.0) << s.letters();
        if (!s.is_identity()) {
            EXPECT_LT(std::abs(m.trace()), 1e-15) << s.letters();
        }
    }
}

TEST(StringMatrix, BasisIsOrthogonal) {
    auto basis = operator_basis(3);
    for (const auto &a : basis) {
        ComplexMatrix ma = string_matrix(a);
        for (const auto &b : basis) {
            Complex tr = (ma * string_matrix(b)).trace();
            EXPECT_LT(std::abs(tr - Complex(a == b ? 8.0 : 0.0)), 1e-12) << a.letters() << " " << b.letters();
        }
    }
}

TEST(StringElement, AgreesWithDenseMatrix) {
    for (const auto &s : operator_basis(2)) {
        ComplexMatrix m = string_matrix(s);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                EXPECT_EQ(string_element(s, r, c), m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
            }
        }
    }
}

TEST(Multiply, PhaseAndStringMatchMatrixProduct) {
    auto basis = operator_basis(2);
    for (const auto &a : basis) {
        for (const auto &b : basis) {
            PauliProduct p = multiply(a, b);
            ComplexMatrix expected = string_matrix(a) * string_matrix(b);
            EXPECT_LT(max_norm(p.phase * string_matrix(p.string), expected), 1e-15) << a.letters() << b.letters();
        }
    }
}

TEST(CommutesWith, MatchesCommutator) {
    auto basis = operator_basis(2);
    for (const auto &a : basis) {
        for (const auto &b : basis) {
            ComplexMatrix ma = string_matrix(a);
            ComplexMatrix mb = string_matrix(b);
            bool commute = (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12;
            EXPECT_EQ(a.commutes_with(b), commute) << a.letters() << " " << b.letters();
        }
    }
}

TEST(PauliString, LettersIndexRoundTrip) {
    for (int n = 1; n <= 3; ++n) {
        auto basis = operator_basis(n);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            EXPECT_EQ(basis[i].index(), i);
            EXPECT_EQ(PauliString::from_index(n, i), basis[i]);
            EXPECT_EQ(PauliString::from_letters(basis[i].letters()), basis[i]);
        }
    }
    EXPECT_EQ(PauliString::from_letters("x_z"), PauliString::from_letters("XIZ"));
    EXPECT_TRUE(throws_code([] { PauliString::from_letters("XQ"); }, ErrorCode::InvalidArgument));
    EXPECT_TRUE(throws_code([] { PauliString::from_letters(""); }, ErrorCode::InvalidArgument));
    EXPECT_EQ(PauliString::from_letters("XYZ").weight(), 3);
    EXPECT_EQ(PauliString::from_letters("IYI").weight(), 1);
}

TEST(OperatorBasis, SizesAndOrder) {
    auto one = operator_basis(1);
    ASSERT_EQ(one.size(), 4u);
    EXPECT_EQ(one[0].letters(), "I");
    EXPECT_EQ(one[1].letters(), "X");
    EXPECT_EQ(one[2].letters(), "Y");
    EXPECT_EQ(one[3].letters(), "Z");
    auto two = operator_basis(2);
    EXPECT_EQ(two.size(), 16u);
    EXPECT_TRUE(two.front().is_identity());
    EXPECT_EQ(two[1].letters(), "IX");
    EXPECT_EQ(two.back().letters(), "ZZ");
    EXPECT_EQ(operator_basis(3).size(), 64u);
}

TEST(Expectation, ReferenceValues) {
    EXPECT_EQ(expectation(ComplexMatrix::Identity(4, 4) / 4.0, PauliString::from_letters("ZZ")), 0.0);
    for (double phi : {0.0, 0.4, 1.9, -2.7}) {
        ComplexMatrix rho = testing::literal_bell(phi);
        EXPECT_NEAR(expectation(rho, PauliString::from_letters("ZZ")), 1.0, 1e-15);
        EXPECT_NEAR(expectation(rho, PauliString::from_letters("XY")), std::sin(phi), 1e-15);
        EXPECT_NEAR(expectation(rho, PauliString::from_letters("YX")), std::sin(phi), 1e-15);
        EXPECT_NEAR(expectation(rho, PauliString::from_letters("XX")), std::cos(phi), 1e-15);
        EXPECT_NEAR(expectation(rho, PauliString::from_letters("YY")), -std::cos(phi), 1e-15);
    }
}

TEST(Expectation, Errors) {
    ComplexMatrix rho = ComplexMatrix::Identity(4, 4) / 4.0;
    EXPECT_TRUE(throws_code([&] { expectation(rho, PauliString::from_letters("Z")); }, ErrorCode::DimensionMismatch));
    ComplexMatrix skew = rho;
    skew(0, 1) = Complex(0, 0.3);
    EXPECT_TRUE(
        throws_code([&] { expectation(skew, PauliString::from_letters("IX")); }, ErrorCode::NonRealExpectation));
}

TEST(Expectation, LinearAndBounded) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        DensityMatrix a = random_mixed_state(2, rng);
        DensityMatrix b = random_mixed_state(2, rng);
        for (const auto &s : operator_basis(2)) {
            double ea = expectation(a.matrix(), s);
            double eb = expectation(b.matrix(), s);
            EXPECT_LE(std::abs(ea), 1 + 1e-12);
            EXPECT_NEAR(expectation(0.3 * a.matrix() + 0.7 * b.matrix(), s), 0.3 * ea + 0.7 * eb, 1e-14);
        }
    }
}

TEST(Bloch, RoundTripOnRandomStates) {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            DensityMatrix rho = random_mixed_state(n, rng);
            BlochExpansion e = bloch_decompose(rho.matrix());
            EXPECT_EQ(e.size(), std::size_t{1} << (2 * n));
            EXPECT_EQ(e.coefficient(PauliString::identity(n)), 1.0);
            for (double v : e.coefficients()) {
                EXPECT_LE(std::abs(v), 1 + 1e-12);
            }
            EXPECT_LT(max_norm(bloch_compose(e), rho.matrix()), 1e-12);
        }
    }
}

TEST(Bloch, MaximallyMixedHasNoCorrelations) {
    BlochExpansion e = bloch_decompose(ComplexMatrix::Identity(8, 8) / 8.0);
    for (const auto &s : operator_basis(3)) {
        EXPECT_EQ(e.coefficient(s), s.is_identity() ? 1.0 : 0.0);
    }
    EXPECT_LT(max_norm(bloch_compose(BlochExpansion(3)), ComplexMatrix::Identity(8, 8) / 8.0), 1e-16);
}

TEST(Bloch, BellZeroSupport) {
    BlochExpansion e = bloch_decompose(testing::literal_bell(0));
    for (const auto &s : operator_basis(2)) {
        double expected = 0;
        if (s.letters() == "II" || s.letters() == "ZZ" || s.letters() == "XX") {
            expected = 1;
        } else if (s.letters() == "YY") {
            expected = -1;
        }
        EXPECT_NEAR(e.coefficient(s), expected, 1e-15) << s.letters();
    }
    BlochExpansion composed(2);
    composed.set(PauliString::from_letters("ZZ"), 1);
    composed.set(PauliString::from_letters("XX"), 1);
    composed.set(PauliString::from_letters("YY"), -1);
    EXPECT_LT(max_norm(bloch_compose(composed), testing::literal_bell(0)), 1e-15);
}

TEST(Bloch, GhzSupportMatchesTrigonometricPattern) {
    for (double phi : {0.0, 0.8, 2.2, -1.3}) {
        BlochExpansion e = bloch_decompose(testing::literal_ghz(phi));
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        std::map<std::string, double> expected = {{"III", 1}, {"ZZI", 1},  {"IZZ", 1},  {"ZIZ", 1},
                                                  {"XXY", s}, {"YXX", s},  {"XYX", s},  {"YYX", -c},
                                                  {"XYY", -c}, {"YXY", -c}, {"XXX", c}, {"YYY", -s}};
        for (const auto &str : operator_basis(3)) {
            auto it = expected.find(str.letters());
            EXPECT_NEAR(e.coefficient(str), it == expected.end() ? 0.0 : it->second, 1e-12) << str.letters();
        }
    }
}

TEST(Bloch, ComposeCanBeUnphysical) {
    BlochExpansion e(2);
    for (const char *s : {"ZZ", "XX", "YY"}) {
        e.set(PauliString::from_letters(s), 1);
    }
    ComplexMatrix m = bloch_compose(e);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    EXPECT_NEAR(solver.eigenvalues().minCoeff(), -0.5, 1e-15);
    EXPECT_NEAR(m.trace().real(), 1.0, 1e-15);
}

TEST(Bloch, IdentityCoefficientIsFixed) {
    BlochExpansion e(2);
    EXPECT_TRUE(throws_code([&] { e.set(PauliString::identity(2), 0.5); }, ErrorCode::InvalidArgument));
    EXPECT_TRUE(throws_code([&] { e.set(PauliString::from_letters("Z"), 0.5); }, ErrorCode::DimensionMismatch));
}

TEST(SpinsForDimension, PowersOfTwo) {
    EXPECT_EQ(spins_for_dimension(2), 1);
    EXPECT_EQ(spins_for_dimension(8), 3);
    EXPECT_TRUE(throws_code([] { spins_for_dimension(6); }, ErrorCode::DimensionMismatch));
}

}  // namespace
}  // namespace qmaxent

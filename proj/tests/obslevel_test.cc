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

#include <gtest/gtest.h>

#include "qmaxent/solver.h"
#include "qmaxent/states.h"
#include "test_util.h"

namespace qmaxent {
namespace {

using testing::throws_code;

std::vector<std::string> letters_of(const ObservationLevel &level) {
    std::vector<std::string> out;
    for (const auto &s : level.observables()) {
        out.push_back(s.letters());
    }
    return out;
}

using Letters = std::vector<std::string>;

TEST(NamedLevel, RegistryContents) {
    EXPECT_EQ(letters_of(named_level("A1")), (Letters{"Z"}));
    EXPECT_EQ(letters_of(named_level("B1")), (Letters{"Z", "X"}));
    EXPECT_EQ(letters_of(named_level("C1")), (Letters{"Z", "X", "Y"}));
    EXPECT_EQ(letters_of(named_level("A2")), (Letters{"ZI", "IZ"}));
    EXPECT_EQ(letters_of(named_level("B2")), (Letters{"ZI", "IZ", "ZZ"}));
    EXPECT_EQ(letters_of(named_level("C2")), (Letters{"ZI", "IZ", "ZZ", "IX"}));
    EXPECT_EQ(letters_of(named_level("D2")), (Letters{"ZI", "IZ", "ZZ", "IX", "IY"}));
    EXPECT_EQ(letters_of(named_level("E2")), (Letters{"ZZ", "XX"}));
    EXPECT_EQ(letters_of(named_level("G2")), (Letters{"ZZ", "XX", "XY", "YX", "YY"}));
    EXPECT_EQ(letters_of(named_level("H2")), (Letters{"XX", "XY", "YX", "YY"}));
    EXPECT_EQ(letters_of(named_level("B3")), (Letters{"ZZI", "IZZ"}));
    EXPECT_EQ(letters_of(named_level("B3x")), (Letters{"XXI", "IXX"}));
    EXPECT_EQ(letters_of(named_level("B3y")), (Letters{"YYI", "IYY"}));
    EXPECT_EQ(letters_of(named_level("C3")), (Letters{"ZZI", "IZZ", "XXX", "YYY"}));
    EXPECT_TRUE(named_level("C2").inferred());
    EXPECT_TRUE(named_level("D2").inferred());
    EXPECT_FALSE(named_level("G2").inferred());
    EXPECT_EQ(named_level("G2").name(), "G2");
}

TEST(NamedLevel, UnknownAndUnregisteredKeys) {
    for (const char *key : {"Z9", "F2", "I2", "J2", ""}) {
        EXPECT_TRUE(throws_code([&] { named_level(key); }, ErrorCode::UnknownLevel)) << key;
    }
    EXPECT_EQ(registered_level_keys().size(), 14u);
}

TEST(ObservationLevel, Invariants) {
    auto zz = PauliString::from_letters("ZZ");
    EXPECT_TRUE(throws_code([&] { ObservationLevel(2, {zz, zz}); }, ErrorCode::DuplicateObservable));
    EXPECT_TRUE(throws_code([] { ObservationLevel(2, {PauliString::identity(2)}); }, ErrorCode::InvalidArgument));
    EXPECT_TRUE(throws_code([] { ObservationLevel(2, {PauliString::from_letters("Z")}); },
                            ErrorCode::DimensionMismatch));
    EXPECT_TRUE(named_level("H2").is_subset_of(named_level("G2")));
    EXPECT_FALSE(named_level("G2").is_subset_of(named_level("H2")));
    EXPECT_EQ(identify_level(ObservationLevel(2, {PauliString::from_letters("XX"), zz})), "E2");
    EXPECT_EQ(identify_level(ObservationLevel(2, {PauliString::from_letters("ZX")})), std::nullopt);
}

TEST(Extend, Examples) {
    ObservationLevel b2 = extend(named_level("A2"), {PauliString::from_letters("ZZ")});
    EXPECT_TRUE(b2.same_observables(named_level("B2")));
    EXPECT_EQ(b2.name(), "B2");
    EXPECT_TRUE(extend(named_level("E2"), {}).same_observables(named_level("E2")));
    ObservationLevel g2 = extend(named_level("H2"), {PauliString::from_letters("ZZ")});
    EXPECT_TRUE(g2.same_observables(named_level("G2")));
    EXPECT_EQ(g2.name(), "G2");
    EXPECT_TRUE(throws_code([] { extend(named_level("E2"), {PauliString::from_letters("XX")}); },
                            ErrorCode::DuplicateObservable));
}

TEST(Reduce, MirrorsExtend) {
    EXPECT_TRUE(reduce(named_level("B2"), {PauliString::from_letters("ZZ")}).same_observables(named_level("A2")));
    EXPECT_TRUE(reduce(named_level("E2"), {}).same_observables(named_level("E2")));
    ObservationLevel h2 = reduce(named_level("G2"), {PauliString::from_letters("ZZ")});
    EXPECT_TRUE(h2.same_observables(named_level("H2")));
    EXPECT_EQ(h2.name(), "H2");
    EXPECT_TRUE(
        throws_code([] { reduce(named_level("E2"), {PauliString::from_letters("YY")}); }, ErrorCode::NotMember));
}

TEST(Reduce, ExtendThenReduceIsIdentity) {
    for (const auto &key : registered_level_keys()) {
        ObservationLevel base = named_level(key);
        for (const auto &extra : operator_basis(base.spins())) {
            if (extra.is_identity() || base.contains(extra)) {
                continue;
            }
            ObservationLevel back = reduce(extend(base, {extra}), {extra});
            EXPECT_EQ(back.observables(), base.observables()) << key << " + " << extra.letters();
        }
    }
}

TEST(ConstraintsFromState, Examples) {
    for (double phi : {0.0, 0.7, 2.9}) {
        ConstraintSet c = constraints_from_state(bell(phi).density(), named_level("G2"));
        std::vector<double> expected{1, std::cos(phi), std::sin(phi), std::sin(phi), -std::cos(phi)};
        for (std::size_t i = 0; i < expected.size(); ++i) {
            EXPECT_NEAR(c.means()[i], expected[i], 1e-15);
        }
        ConstraintSet g = constraints_from_state(ghz(phi).density(), named_level("C3"));
        std::vector<double> ghz_expected{1, 1, std::cos(phi), -std::sin(phi)};
        for (std::size_t i = 0; i < ghz_expected.size(); ++i) {
            EXPECT_NEAR(g.means()[i], ghz_expected[i], 1e-15);
        }
    }
    ConstraintSet zero = constraints_from_state(DensityMatrix::maximally_mixed(2), named_level("D2"));
    for (double m : zero.means()) {
        EXPECT_EQ(m, 0.0);
    }
    EXPECT_TRUE(throws_code([] { constraints_from_state(DensityMatrix::maximally_mixed(1), named_level("G2")); },
                            ErrorCode::DimensionMismatch));
}

TEST(ConstraintSet, Validation) {
    EXPECT_TRUE(throws_code([] { ConstraintSet(named_level("E2"), {0.1}); }, ErrorCode::DimensionMismatch));
    EXPECT_TRUE(throws_code([] { ConstraintSet(named_level("E2"), {0.1, 1.5}); }, ErrorCode::InvalidArgument));
    ConstraintSet c(named_level("E2"), {0.25, -0.5});
    EXPECT_EQ(c.mean_of(PauliString::from_letters("XX")), -0.5);
    EXPECT_EQ(c.mean_of(PauliString::from_letters("YY")), std::nullopt);
    EXPECT_NEAR(constraint_residual(ComplexMatrix::Identity(4, 4) / 4.0, c), 0.5, 1e-15);
}

TEST(Chains, RegisteredChainsAreNested) {
    for (const auto &chain : registered_chains()) {
        for (std::size_t i = 1; i < chain.size(); ++i) {
            EXPECT_TRUE(named_level(chain[i - 1]).is_subset_of(named_level(chain[i]))) << chain[i];
        }
    }
}

TEST(Chains, EntropyDoesNotIncreaseAlongTwoSpinChain) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        DensityMatrix rho = random_mixed_state(2, rng);
        double previous = 1e300;
        for (const char *key : {"A2", "B2", "C2", "D2"}) {
            double s = reconstruct(constraints_from_state(rho, named_level(key))).entropy;
            EXPECT_LE(s, previous + 1e-8) << key;
            previous = s;
        }
    }
}

}  // namespace
}  // namespace qmaxent

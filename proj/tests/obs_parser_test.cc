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

#include "qmaxent/obs_parser.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace qmaxent {
namespace {

using testing::throws_code;

double error_offset(std::string_view text, int n) {
    try {
        parse_observable(text, n);
    } catch (const Error &e) {
        return e.value();
    }
    return -1;
}

TEST(ParseObservable, Examples) {
    EXPECT_EQ(parse_observable("sz(1)*sz(2)", 2), PauliString::from_letters("ZZ"));
    EXPECT_EQ(parse_observable("sx(1)*sy(2)*sy(3)", 3), PauliString::from_letters("XYY"));
    EXPECT_EQ(parse_observable("sy(2)", 3), PauliString::from_letters("IYI"));
    EXPECT_EQ(parse_observable("sz(3)*sx(1)", 3), PauliString::from_letters("XIZ"));
    EXPECT_EQ(parse_observable("id", 2), PauliString::identity(2));
}

TEST(ParseObservable, CaseAndWhitespaceInsensitive) {
    EXPECT_EQ(parse_observable("  SX( 1 ) *Sz(2)  ", 2), PauliString::from_letters("XZ"));
    EXPECT_EQ(parse_observable("sx(1) * sy(2)", 2), parse_observable("sx(1)*sy(2)", 2));
    EXPECT_EQ(parse_observable("ID", 1), PauliString::identity(1));
}

TEST(ParseObservable, Errors) {
    EXPECT_TRUE(throws_code([] { parse_observable("sx(1)*sx(1)", 2); }, ErrorCode::DuplicateSite));
    EXPECT_TRUE(throws_code([] { parse_observable("sx(3)", 2); }, ErrorCode::SiteOutOfRange));
    EXPECT_TRUE(throws_code([] { parse_observable("sx(0)", 2); }, ErrorCode::SiteOutOfRange));
    EXPECT_TRUE(throws_code([] { parse_observable("sw(1)", 2); }, ErrorCode::SyntaxError));
    EXPECT_TRUE(throws_code([] { parse_observable("sx(1)*", 2); }, ErrorCode::SyntaxError));
    EXPECT_TRUE(throws_code([] { parse_observable("sx(1) sy(2)", 2); }, ErrorCode::SyntaxError));
    EXPECT_TRUE(throws_code([] { parse_observable("", 2); }, ErrorCode::SyntaxError));
    EXPECT_TRUE(throws_code([] { parse_observable("id*sx(1)", 2); }, ErrorCode::SyntaxError));
    EXPECT_TRUE(throws_code([] { parse_observable("sx(1", 2); }, ErrorCode::SyntaxError));
}

TEST(ParseObservable, ErrorPositionsAreByteOffsets) {
    EXPECT_EQ(error_offset("sx(1)*sq(2)", 2), 7);
    EXPECT_EQ(error_offset("sx(1)  sy(2)", 2), 7);
    EXPECT_EQ(error_offset("sx(1)*sx(1)", 2), 6);
    EXPECT_EQ(error_offset("sx(9)", 2), 3);
}

TEST(FormatObservable, Canonical) {
    EXPECT_EQ(format_observable(PauliString::from_letters("ZZ")), "sz(1)*sz(2)");
    EXPECT_EQ(format_observable(PauliString::from_letters("XYY")), "sx(1)*sy(2)*sy(3)");
    EXPECT_EQ(format_observable(PauliString::from_letters("IXI")), "sx(2)");
    EXPECT_EQ(format_observable(PauliString::identity(3)), "id");
}

TEST(FormatObservable, RoundTripsEveryString) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto &s : operator_basis(n)) {
            EXPECT_EQ(parse_observable(format_observable(s), n), s) << s.letters();
        }
    }
}

TEST(ParseLevelText, LinesAndComments) {
    auto obs = parse_level_text("# custom level\nsz(1)*sz(2)\n\n  sx(1)*sx(2)  # second\n", 2);
    ASSERT_EQ(obs.size(), 2u);
    EXPECT_EQ(obs[0], PauliString::from_letters("ZZ"));
    EXPECT_EQ(obs[1], PauliString::from_letters("XX"));
}

TEST(ParseLevelText, OffsetsCountFromStartOfText) {
    try {
        parse_level_text("sz(1)\nsq(2)\n", 2);
        FAIL() << "expected a syntax error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        EXPECT_EQ(e.value(), 7);
    }
}

}  // namespace
}  // namespace qmaxent

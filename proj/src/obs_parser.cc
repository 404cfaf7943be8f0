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

#include <cctype>

#include "qmaxent/errors.h"

namespace qmaxent {

namespace {

class ObservableParser {
   public:
    ObservableParser(std::string_view text, int n, std::size_t base_offset)
        : text_(text), n_(n), base_(base_offset), factors_(static_cast<std::size_t>(n), Axis::I),
          assigned_(static_cast<std::size_t>(n), false) {
    }

    PauliString parse() {
        skip_space();
        if (at_end()) {
            fail("empty observable expression");
        }
        if (try_keyword("id")) {
            skip_space();
            expect_end();
            return PauliString(factors_);
        }
        parse_factor();
        skip_space();
        while (!at_end()) {
            if (peek() != '*') {
                fail(std::string("expected '*' but found '") + peek() + "'");
            }
            ++pos_;
            skip_space();
            parse_factor();
            skip_space();
        }
        return PauliString(factors_);
    }

   private:
    void parse_factor() {
        std::size_t start = pos_;
        if (at_end() || std::tolower(static_cast<unsigned char>(peek())) != 's') {
            fail("expected sx, sy or sz");
        }
        ++pos_;
        if (at_end()) {
            fail("expected x, y or z after 's'");
        }
        Axis axis;
        switch (std::tolower(static_cast<unsigned char>(peek()))) {
            case 'x':
                axis = Axis::X;
                break;
            case 'y':
                axis = Axis::Y;
                break;
            case 'z':
                axis = Axis::Z;
                break;
            default:
                fail(std::string("expected x, y or z after 's' but found '") + peek() + "'");
        }
        ++pos_;
        skip_space();
        expect_char('(');
        skip_space();
        std::size_t site_pos = pos_;
        long site = parse_site();
        skip_space();
        expect_char(')');
        if (site < 1 || site > n_) {
            throw Error(ErrorCode::SiteOutOfRange,
                        "site " + std::to_string(site) + " outside 1.." + std::to_string(n_) + " at offset " +
                            std::to_string(base_ + site_pos),
                        static_cast<double>(base_ + site_pos));
        }
        auto idx = static_cast<std::size_t>(site - 1);
        if (assigned_[idx]) {
            throw Error(ErrorCode::DuplicateSite,
                        "site " + std::to_string(site) + " used twice at offset " + std::to_string(base_ + start),
                        static_cast<double>(base_ + start));
        }
        assigned_[idx] = true;
        factors_[idx] = axis;
    }

    long parse_site() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected a site number");
        }
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000) {
                fail("site number too large");
            }
            ++pos_;
        }
        return value;
    }

    bool try_keyword(std::string_view word) {
        if (text_.size() - pos_ < word.size()) {
            return false;
        }
        for (std::size_t k = 0; k < word.size(); ++k) {
            if (std::tolower(static_cast<unsigned char>(text_[pos_ + k])) != word[k]) {
                return false;
            }
        }
        pos_ += word.size();
        return true;
    }

    void expect_char(char c) {
        if (at_end() || peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void expect_end() {
        if (!at_end()) {
            fail("unexpected trailing input");
        }
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool at_end() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return text_[pos_];
    }

    [[noreturn]] void fail(const std::string &what) const {
        std::size_t offset = base_ + pos_;
        throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset), static_cast<double>(offset));
    }

    std::string_view text_;
    int n_;
    std::size_t base_;
    std::size_t pos_ = 0;
    std::vector<Axis> factors_;
    std::vector<bool> assigned_;
};

}  // namespace

PauliString parse_observable(std::string_view text, int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "spin count must be positive");
    }
    return ObservableParser(text, n, 0).parse();
}

std::string format_observable(const PauliString &s) {
    std::string out;
    for (int k = 0; k < s.size(); ++k) {
        if (s[k] == Axis::I) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 's';
        out += static_cast<char>(std::tolower(axis_letter(s[k])));
        out += '(' + std::to_string(k + 1) + ')';
    }
    return out.empty() ? "id" : out;
}

std::vector<PauliString> parse_level_text(std::string_view text, int n) {
    std::vector<PauliString> out;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) {
            line_end = text.size();
        }
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        bool blank = true;
        for (char c : line) {
            blank = blank && std::isspace(static_cast<unsigned char>(c));
        }
        if (!blank) {
            out.push_back(ObservableParser(line, n, line_start).parse());
        }
        line_start = line_end + 1;
    }
    return out;
}

}  // namespace qmaxent

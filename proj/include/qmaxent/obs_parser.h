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

#ifndef QMAXENT_OBS_PARSER_H
#define QMAXENT_OBS_PARSER_H

#include <string>
#include <string_view>
#include <vector>

#include "qmaxent/pauli_algebra.h"

namespace qmaxent {

// Grammar (case-insensitive, whitespace allowed between tokens):
//
//   expr   := "id" | factor ( "*" factor )*
//   factor := ( "sx" | "sy" | "sz" ) "(" site ")"
//   site   := decimal integer, 1-based
//
// Unmentioned sites are identity. Errors carry the byte offset of the problem
// in Error::value().

PauliString parse_observable(std::string_view text, int n);

/// Canonical lowercase form, ascending site order, identity sites omitted;
/// the all-identity string is "id".
std::string format_observable(const PauliString &s);

/// One expression per line; blank lines and '#' comments are skipped. Error
/// offsets are relative to the whole text.
std::vector<PauliString> parse_level_text(std::string_view text, int n);

}  // namespace qmaxent

#endif

// Copyright 2026 The ddlgame Authors
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

// The .ddt theory/game language.
//
//   # comment to end of line
//   fact [O] [~]atom.
//   rule ID: ANT, ..., ANT (=> | =>O) [~]atom.
//       ANT := [(+|-)(d|p|s|w)] [O] [~]atom
//   sup ID > ID.
//   claim: [~]atom, ..., [~]atom.
//   game (pr|def|common): ID, ..., ID.
//   standard evidential (d|p|s|w).
//   standard deontic (d|p).
//
// Atoms and rule ids match [a-z][A-Za-z0-9_]*. Rules not listed in a game
// section are common. Tags: d = delta, p = partial, s = sigma,
// w = sigma minus.

#ifndef DDL_PARSER_HPP_
#define DDL_PARSER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddl/theory.hpp"

namespace ddl {

struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 1;
};

struct ParseError {
  SourceSpan span;
  std::string message;
  std::vector<std::string> expected;

  // "3:14: expected '.' (got end of input)"
  std::string ToString() const;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseError> errors;

  bool ok() const { return value.has_value(); }
  explicit operator bool() const { return ok(); }
};

ParseResult<GameSetup> ParseTheory(std::string_view source);

// Canonical text: facts, rules by id, superiority pairs, claim, game
// sections, non-default standards. Always LF-terminated lines.
std::string SerializeTheory(const GameSetup& setup);

// "+d b", "-p O ~b".
ParseResult<TaggedLiteral> ParseQuery(std::string_view text);

// "b", "~b", "E b", "O ~b".
ParseResult<ModalLiteral> ParseModalLiteral(std::string_view text);

}  // namespace ddl

#endif  // DDL_PARSER_HPP_

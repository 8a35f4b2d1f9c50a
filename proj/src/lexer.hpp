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

// Shared tokenizer and statement-level helpers for the .ddt and moves
// languages. Internal to the library.

#ifndef DDL_SRC_LEXER_HPP_
#define DDL_SRC_LEXER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddl/parser.hpp"
#include "ddl/theory.hpp"

namespace ddl::detail {

enum class Tok {
  kIdent,   // [a-z][A-Za-z0-9_]*
  kUpper,   // [A-Z][A-Za-z0-9_]*, only "O" and "E" are meaningful
  kDot,
  kComma,
  kColon,
  kTilde,
  kGt,
  kArrow,   // =>
  kArrowO,  // =>O
  kPlus,
  kMinus,
  kError,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

// Never fails; unknown characters become kError tokens carrying the
// message in `text`. The last token is always kEnd, whose span points at
// the final character of the source (or 1:1 for empty input).
std::vector<Token> Tokenize(std::string_view source);

std::string Describe(const Token& t);

// Cursor over a token stream with first-error-per-statement recovery.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& Peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = Peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool AtEnd() const { return Peek().kind == Tok::kEnd; }
  bool Accept(Tok k) {
    if (Peek().kind != k) return false;
    Next();
    return true;
  }
  // Skips past the next '.', or to the end.
  void Recover() {
    while (!AtEnd()) {
      if (Next().kind == Tok::kDot) return;
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Thrown inside statement parsers, caught per statement.
struct StatementError {
  ParseError error;
};

[[noreturn]] void Fail(const Token& at, std::string message,
                       std::vector<std::string> expected = {});

const Token& Expect(TokenStream& ts, Tok kind, std::string_view what);
std::string ExpectIdent(TokenStream& ts, std::string_view what);
Literal ParseLiteralTokens(TokenStream& ts);
// [O|E] [~]atom
ModalLiteral ParseModalLiteralTokens(TokenStream& ts);

}  // namespace ddl::detail

#endif  // DDL_SRC_LEXER_HPP_

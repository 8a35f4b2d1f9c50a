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

#include "ddl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "lexer.hpp"

namespace ddl {

std::string ParseError::ToString() const {
  std::ostringstream os;
  os << span.line << ':' << span.column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      os << (i ? ", " : "") << expected[i];
    os << ')';
  }
  return os.str();
}

namespace detail {

namespace {

bool IdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> Tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  SourceSpan last{1, 1, 1};
  std::size_t i = 0;
  const auto emit = [&](Tok k, std::size_t len, std::string text) {
    SourceSpan span{line, col, static_cast<int>(len)};
    out.push_back({k, std::move(text), span});
    last = {line, col + static_cast<int>(len) - 1, 1};
    i += len;
    col += static_cast<int>(len);
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      last = {line, col, 1};
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      last = {line, col, 1};
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') {
        last = {line, col, 1};
        ++i;
        ++col;
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && IdentChar(src[j])) ++j;
      const Tok k = std::islower(static_cast<unsigned char>(c)) ? Tok::kIdent
                                                                : Tok::kUpper;
      emit(k, j - i, std::string(src.substr(i, j - i)));
      continue;
    }
    switch (c) {
      case '.': emit(Tok::kDot, 1, "."); continue;
      case ',': emit(Tok::kComma, 1, ","); continue;
      case ':': emit(Tok::kColon, 1, ":"); continue;
      case '~': emit(Tok::kTilde, 1, "~"); continue;
      case '>': emit(Tok::kGt, 1, ">"); continue;
      case '+': emit(Tok::kPlus, 1, "+"); continue;
      case '-': emit(Tok::kMinus, 1, "-"); continue;
      case '=':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          const bool deontic = i + 2 < src.size() && src[i + 2] == 'O' &&
                               (i + 3 >= src.size() || !IdentChar(src[i + 3]));
          if (deontic)
            emit(Tok::kArrowO, 3, "=>O");
          else
            emit(Tok::kArrow, 2, "=>");
          continue;
        }
        break;
      default:
        break;
    }
    // Report one error per run of non-ASCII bytes (a UTF-8 sequence).
    std::size_t len = 1;
    if (static_cast<unsigned char>(c) >= 0x80) {
      while (i + len < src.size() &&
             (static_cast<unsigned char>(src[i + len]) & 0xC0) == 0x80)
        ++len;
    }
    std::string shown(src.substr(i, len));
    emit(Tok::kError, len, "unexpected character '" + shown + "'");
  }
  out.push_back({Tok::kEnd, "", last});
  return out;
}

std::string Describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kError: return t.text;
    default: return "'" + t.text + "'";
  }
}

void Fail(const Token& at, std::string message,
          std::vector<std::string> expected) {
  throw StatementError{ParseError{at.span, std::move(message),
                                  std::move(expected)}};
}

const Token& Expect(TokenStream& ts, Tok kind, std::string_view what) {
  const Token& t = ts.Peek();
  if (t.kind != kind) {
    if (t.kind == Tok::kError) Fail(t, t.text, {std::string(what)});
    Fail(t, "expected " + std::string(what) + ", got " + Describe(t),
         {std::string(what)});
  }
  return ts.Next();
}

std::string ExpectIdent(TokenStream& ts, std::string_view what) {
  return Expect(ts, Tok::kIdent, what).text;
}

Literal ParseLiteralTokens(TokenStream& ts) {
  const bool negated = ts.Accept(Tok::kTilde);
  return Literal(ExpectIdent(ts, "atom"), !negated);
}

ModalLiteral ParseModalLiteralTokens(TokenStream& ts) {
  Mode mode = Mode::kEvidential;
  const Token& t = ts.Peek();
  if (t.kind == Tok::kUpper) {
    if (t.text == "O")
      mode = Mode::kObligation;
    else if (t.text != "E")
      Fail(t, "unknown mode " + Describe(t), {"'O'", "'E'"});
    ts.Next();
  }
  return {mode, ParseLiteralTokens(ts)};
}

}  // namespace detail

namespace {

using detail::Expect;
using detail::ExpectIdent;
using detail::Fail;
using detail::ParseLiteralTokens;
using detail::Tok;
using detail::Token;
using detail::TokenStream;

// Optional "O" in the theory language, where "E" is not allowed.
Mode ParseOptionalObligation(TokenStream& ts) {
  const Token& t = ts.Peek();
  if (t.kind != Tok::kUpper) return Mode::kEvidential;
  if (t.text != "O") Fail(t, "unknown mode " + Describe(t), {"'O'"});
  ts.Next();
  return Mode::kObligation;
}

Annotation ParseAnnotation(TokenStream& ts) {
  const Token& sign_tok = ts.Next();
  const Token& tag_tok = ts.Peek();
  if (tag_tok.kind != Tok::kIdent)
    Fail(tag_tok, "malformed annotation: expected tag after '" +
                      sign_tok.text + "'",
         {"d", "p", "s", "w"});
  const auto tag =
      tag_tok.text.size() == 1 ? TagFromCode(tag_tok.text[0]) : std::nullopt;
  if (!tag)
    Fail(tag_tok, "malformed annotation: unknown tag '" + tag_tok.text + "'",
         {"d", "p", "s", "w"});
  ts.Next();
  return {sign_tok.kind == Tok::kPlus ? Sign::kPlus : Sign::kMinus, *tag};
}

struct IdRef {
  RuleId id;
  SourceSpan span;
};

struct Builder {
  GameSetup setup;
  std::vector<std::pair<Rule, SourceSpan>> rules;
  std::vector<std::pair<IdRef, IdRef>> sups;
  std::vector<std::pair<IdRef, std::string>> section_refs;
};

void ParseStatement(TokenStream& ts, Builder& b) {
  const Token& kw = ts.Peek();
  if (kw.kind != Tok::kIdent)
    Fail(kw, "expected statement, got " + Describe(kw),
         {"fact", "rule", "sup", "claim", "game", "standard"});
  ts.Next();
  if (kw.text == "fact") {
    const Mode mode = ParseOptionalObligation(ts);
    b.setup.common_facts.insert({mode, ParseLiteralTokens(ts)});
  } else if (kw.text == "rule") {
    const Token& id_tok = ts.Peek();
    Rule r;
    r.id = ExpectIdent(ts, "rule id");
    Expect(ts, Tok::kColon, "':'");
    do {
      Antecedent a;
      if (ts.Peek().kind == Tok::kPlus || ts.Peek().kind == Tok::kMinus)
        a.annotation = ParseAnnotation(ts);
      a.mode = ParseOptionalObligation(ts);
      a.literal = ParseLiteralTokens(ts);
      r.antecedents.push_back(std::move(a));
    } while (ts.Accept(Tok::kComma));
    const Token& arrow = ts.Peek();
    if (arrow.kind == Tok::kArrow) {
      r.head_mode = Mode::kEvidential;
    } else if (arrow.kind == Tok::kArrowO) {
      r.head_mode = Mode::kObligation;
    } else {
      Fail(arrow, "expected '=>' or '=>O', got " + detail::Describe(arrow),
           {"','", "'=>'", "'=>O'"});
    }
    ts.Next();
    r.head = ParseLiteralTokens(ts);
    b.rules.push_back({std::move(r), id_tok.span});
  } else if (kw.text == "sup") {
    IdRef s{"", ts.Peek().span};
    s.id = ExpectIdent(ts, "rule id");
    Expect(ts, Tok::kGt, "'>'");
    IdRef w{"", ts.Peek().span};
    w.id = ExpectIdent(ts, "rule id");
    b.sups.push_back({s, w});
  } else if (kw.text == "claim") {
    Expect(ts, Tok::kColon, "':'");
    do {
      b.setup.claim.evidential.push_back(ParseLiteralTokens(ts));
    } while (ts.Accept(Tok::kComma));
  } else if (kw.text == "game") {
    const Token& who = ts.Peek();
    const std::string section = ExpectIdent(ts, "pr, def or common");
    if (section != "pr" && section != "def" && section != "common")
      Fail(who, "unknown game section '" + section + "'",
           {"pr", "def", "common"});
    Expect(ts, Tok::kColon, "':'");
    do {
      IdRef ref{"", ts.Peek().span};
      ref.id = ExpectIdent(ts, "rule id");
      b.section_refs.push_back({ref, section});
    } while (ts.Accept(Tok::kComma));
  } else if (kw.text == "standard") {
    const Token& which = ts.Peek();
    const std::string kind = ExpectIdent(ts, "evidential or deontic");
    if (kind != "evidential" && kind != "deontic")
      Fail(which, "unknown standard '" + kind + "'", {"evidential", "deontic"});
    const Token& tag_tok = ts.Peek();
    const std::string code = ExpectIdent(ts, "tag");
    const auto tag = code.size() == 1 ? TagFromCode(code[0]) : std::nullopt;
    if (!tag) Fail(tag_tok, "unknown tag '" + code + "'", {"d", "p", "s", "w"});
    if (kind == "deontic" && *tag != TagKind::kDelta &&
        *tag != TagKind::kPartial)
      Fail(tag_tok, "deontic standard must be d or p", {"d", "p"});
    (kind == "evidential" ? b.setup.evidential_standard
                          : b.setup.deontic_standard) = *tag;
  } else {
    Fail(kw, "unknown statement '" + kw.text + "'",
         {"fact", "rule", "sup", "claim", "game", "standard"});
  }
  Expect(ts, Tok::kDot, "'.'");
}

void SortById(std::vector<Rule>& rules) {
  std::sort(rules.begin(), rules.end(),
            [](const Rule& a, const Rule& b) { return a.id < b.id; });
}

}  // namespace

ParseResult<GameSetup> ParseTheory(std::string_view source) {
  ParseResult<GameSetup> result;
  TokenStream ts(detail::Tokenize(source));
  Builder b;
  while (!ts.AtEnd()) {
    try {
      ParseStatement(ts, b);
    } catch (const detail::StatementError& e) {
      result.errors.push_back(e.error);
      ts.Recover();
    }
  }

  // Cross-statement checks.
  std::map<RuleId, SourceSpan> declared;
  for (const auto& [r, span] : b.rules) {
    if (!declared.emplace(r.id, span).second)
      result.errors.push_back(
          {span, "duplicate rule id '" + r.id + "'", {}});
  }
  std::map<RuleId, std::string> section_of;
  for (const auto& [ref, section] : b.section_refs) {
    if (!declared.count(ref.id)) {
      result.errors.push_back(
          {ref.span, "unknown rule id '" + ref.id + "' in game section", {}});
      continue;
    }
    auto [it, fresh] = section_of.emplace(ref.id, section);
    if (!fresh && it->second != section)
      result.errors.push_back({ref.span,
                               "rule '" + ref.id + "' listed in both " +
                                   it->second + " and " + section,
                               {}});
  }
  for (const auto& [s, w] : b.sups) {
    bool known = true;
    for (const IdRef* ref : {&s, &w}) {
      if (!declared.count(ref->id)) {
        result.errors.push_back(
            {ref->span, "unknown rule id '" + ref->id + "' in sup", {}});
        known = false;
      }
    }
    if (known) b.setup.superiority.insert({s.id, w.id});
  }
  if (!result.errors.empty()) return result;

  for (auto& [r, span] : b.rules) {
    auto it = section_of.find(r.id);
    const std::string section = it == section_of.end() ? "common" : it->second;
    auto& pool = section == "pr"    ? b.setup.pr_private
                 : section == "def" ? b.setup.def_private
                                    : b.setup.common_rules;
    pool.push_back(std::move(r));
  }
  SortById(b.setup.common_rules);
  SortById(b.setup.pr_private);
  SortById(b.setup.def_private);
  auto& claim = b.setup.claim.evidential;
  std::sort(claim.begin(), claim.end());
  claim.erase(std::unique(claim.begin(), claim.end()), claim.end());
  result.value = std::move(b.setup);
  return result;
}

namespace {

void AppendIds(std::string& out, std::string_view head,
               const std::vector<Rule>& rules) {
  if (rules.empty()) return;
  std::vector<RuleId> ids;
  for (const auto& r : rules) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  out += head;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out += i ? ", " : " ";
    out += ids[i];
  }
  out += ".\n";
}

}  // namespace

std::string SerializeTheory(const GameSetup& setup) {
  std::string out;
  for (const auto& f : setup.common_facts)
    out += "fact " + f.ToString() + ".\n";
  std::vector<const Rule*> rules;
  for (const auto* pool :
       {&setup.common_rules, &setup.pr_private, &setup.def_private})
    for (const auto& r : *pool) rules.push_back(&r);
  std::sort(rules.begin(), rules.end(),
            [](const Rule* a, const Rule* b) { return a->id < b->id; });
  for (const Rule* r : rules) out += "rule " + r->ToString() + ".\n";
  for (const auto& [s, w] : setup.superiority)
    out += "sup " + s + " > " + w + ".\n";
  if (!setup.claim.empty()) {
    std::vector<Literal> claim = setup.claim.evidential;
    std::sort(claim.begin(), claim.end());
    out += "claim:";
    for (std::size_t i = 0; i < claim.size(); ++i)
      out += (i ? ", " : " ") + claim[i].ToString();
    out += ".\n";
  }
  AppendIds(out, "game pr:", setup.pr_private);
  AppendIds(out, "game def:", setup.def_private);
  if (setup.evidential_standard != TagKind::kDelta)
    out += std::string("standard evidential ") +
           TagCode(setup.evidential_standard) + ".\n";
  if (setup.deontic_standard != TagKind::kPartial)
    out += std::string("standard deontic ") +
           TagCode(setup.deontic_standard) + ".\n";
  return out;
}

ParseResult<TaggedLiteral> ParseQuery(std::string_view text) {
  ParseResult<TaggedLiteral> result;
  TokenStream ts(detail::Tokenize(text));
  try {
    TaggedLiteral q;
    const Token& sign = ts.Peek();
    if (sign.kind != Tok::kPlus && sign.kind != Tok::kMinus)
      Fail(sign, "malformed sign: expected '+' or '-', got " +
                     detail::Describe(sign),
           {"'+'", "'-'"});
    q.sign = sign.kind == Tok::kPlus ? Sign::kPlus : Sign::kMinus;
    ts.Next();
    const Token& tag_tok = ts.Peek();
    if (tag_tok.kind != Tok::kIdent)
      Fail(tag_tok, "malformed tag: got " + detail::Describe(tag_tok),
           {"d", "p", "s", "w"});
    const auto tag =
        tag_tok.text.size() == 1 ? TagFromCode(tag_tok.text[0]) : std::nullopt;
    if (!tag)
      Fail(tag_tok, "unknown tag '" + tag_tok.text + "'", {"d", "p", "s", "w"});
    q.tag = *tag;
    ts.Next();
    const Token& mode_tok = ts.Peek();
    if (mode_tok.kind == Tok::kUpper) {
      if (mode_tok.text != "O" && mode_tok.text != "E")
        Fail(mode_tok, "malformed mode " + detail::Describe(mode_tok),
             {"'O'", "'E'"});
    }
    const ModalLiteral ml = detail::ParseModalLiteralTokens(ts);
    q.mode = ml.mode;
    q.literal = ml.literal;
    if (!ts.AtEnd())
      Fail(ts.Peek(), "trailing input " + detail::Describe(ts.Peek()));
    result.value = q;
  } catch (const detail::StatementError& e) {
    result.errors.push_back(e.error);
  }
  return result;
}

ParseResult<ModalLiteral> ParseModalLiteral(std::string_view text) {
  ParseResult<ModalLiteral> result;
  TokenStream ts(detail::Tokenize(text));
  try {
    ModalLiteral ml = detail::ParseModalLiteralTokens(ts);
    if (!ts.AtEnd())
      Fail(ts.Peek(), "trailing input " + detail::Describe(ts.Peek()));
    result.value = ml;
  } catch (const detail::StatementError& e) {
    result.errors.push_back(e.error);
  }
  return result;
}

}  // namespace ddl

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

#include <gtest/gtest.h>

#include "support/corpus.hpp"

namespace ddl {
namespace {

bool SpanInside(const ParseError& e, std::string_view src) {
  int line = 1, col = 1;
  for (char c : src) {
    if (line == e.span.line && col == e.span.column) return true;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return src.empty() && e.span.line == 1 && e.span.column == 1;
}

TEST(Parser, MinimalProgram) {
  auto r = ParseTheory("fact a. rule r1: a => b.");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->common_facts.size(), 1u);
  ASSERT_EQ(r.value->common_rules.size(), 1u);
  EXPECT_EQ(r.value->common_rules[0].ToString(), "r1: a => b");
  EXPECT_TRUE(r.value->claim.empty());
}

TEST(Parser, S1Fixture) {
  const GameSetup s = testing::LoadFixture("s1.ddt");
  EXPECT_EQ(s.common_facts.size(), 4u);
  EXPECT_TRUE(s.common_rules.empty());
  ASSERT_EQ(s.pr_private.size(), 4u);
  ASSERT_EQ(s.def_private.size(), 3u);
  EXPECT_EQ(s.pr_private[3].ToString(), "r4: g =>O ~b");
  EXPECT_EQ(s.def_private[1].ToString(), "r5: e, f => ~b");
  EXPECT_EQ(s.claim.evidential, std::vector<Literal>{Literal("b")});
  EXPECT_EQ(s.evidential_standard, TagKind::kDelta);
  EXPECT_EQ(s.deontic_standard, TagKind::kPartial);
}

TEST(Parser, MissingPeriod) {
  const std::string src = "rule r: +d a =>O d";
  auto r = ParseTheory(src);
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].span.line, 1);
  EXPECT_EQ(r.errors[0].span.column, static_cast<int>(src.size()));
  EXPECT_TRUE(SpanInside(r.errors[0], src));
}

TEST(Parser, ErrorsPerStatement) {
  auto r = ParseTheory("fact A.\nrule r1 a => b.\nfact ok.\nsup r1 > r9.");
  ASSERT_FALSE(r.ok());
  EXPECT_GE(r.errors.size(), 2u);
  EXPECT_EQ(r.errors[0].span.line, 1);
  EXPECT_EQ(r.errors[1].span.line, 2);
}

TEST(Parser, SemanticErrors) {
  EXPECT_FALSE(ParseTheory("rule r1: a => b. rule r1: a => c.").ok());
  EXPECT_FALSE(ParseTheory("rule r1: a => b. sup r1 > r2.").ok());
  EXPECT_FALSE(ParseTheory("rule r1: a => b. game pr: r1. game def: r1.").ok());
  EXPECT_FALSE(ParseTheory("game pr: r1.").ok());
  EXPECT_FALSE(ParseTheory("rule r1: +z a => b.").ok());
  EXPECT_FALSE(ParseTheory("fact a. fact b.. ").ok());
  EXPECT_FALSE(ParseTheory("fact \xc3\xa9.").ok());
}

TEST(Parser, CommentsAndCrlf) {
  auto r = ParseTheory("# header\r\nfact a. # trailing\r\nrule r1: a =>O ~b.\r\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->common_rules[0].head_mode, Mode::kObligation);
}

TEST(Parser, ArrowOIsNotAnAtomPrefix) {
  auto r = ParseTheory("rule r1: a =>Ob.");
  EXPECT_FALSE(r.ok());
  auto ok = ParseTheory("rule r1: a =>O b.");
  ASSERT_TRUE(ok.ok());
}

TEST(Parser, EmptySetup) {
  auto r = ParseTheory("");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(SerializeTheory(*r.value), "");
}

TEST(Parser, AnnotationTokens) {
  auto r = ParseTheory("rule r: +d a, +p c, -d O ~c =>O d.");
  ASSERT_TRUE(r.ok());
  const std::string text = SerializeTheory(*r.value);
  EXPECT_NE(text.find("+d a, +p c, -d O ~c =>O d"), std::string::npos) << text;
}

TEST(Parser, StandardsStatement) {
  const GameSetup s = testing::LoadFixture("s2.ddt");
  EXPECT_EQ(s.evidential_standard, TagKind::kPartial);
  EXPECT_NE(SerializeTheory(s).find("standard evidential p."),
            std::string::npos);
  EXPECT_FALSE(ParseTheory("standard deontic s.").ok());
}

TEST(Parser, FixturesRoundTrip) {
  for (const char* name : {"s1.ddt", "s2.ddt", "s3.ddt", "s4.ddt",
                           "ambiguity.ddt", "empty_deontic.ddt"}) {
    const GameSetup a = testing::LoadFixture(name);
    auto b = ParseTheory(SerializeTheory(a));
    ASSERT_TRUE(b.ok()) << name;
    EXPECT_EQ(*b.value, a) << name;
    EXPECT_EQ(SerializeTheory(*b.value), SerializeTheory(a)) << name;
  }
}

TEST(Parser, RandomSetupsRoundTrip) {
  std::mt19937_64 rng(99);
  testing::CorpusConfig cfg;
  cfg.annotation_probability = 0.2;
  for (int i = 0; i < 200; ++i) {
    const GameSetup s = testing::RandomSetup(rng, cfg);
    auto once = ParseTheory(SerializeTheory(s));
    ASSERT_TRUE(once.ok()) << SerializeTheory(s);
    auto twice = ParseTheory(SerializeTheory(*once.value));
    ASSERT_TRUE(twice.ok());
    EXPECT_EQ(*twice.value, *once.value);
  }
}

TEST(Parser, Queries) {
  auto a = ParseQuery("+d b");
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(*a.value, (TaggedLiteral{Sign::kPlus, TagKind::kDelta,
                                     Mode::kEvidential, {"b"}}));
  auto b = ParseQuery("-p O ~b");
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(*b.value, (TaggedLiteral{Sign::kMinus, TagKind::kPartial,
                                     Mode::kObligation, {"b", false}}));
  auto z = ParseQuery("+z b");
  ASSERT_FALSE(z.ok());
  EXPECT_NE(z.errors[0].message.find("unknown tag"), std::string::npos);
  auto sign = ParseQuery("*d b");
  ASSERT_FALSE(sign.ok());
  EXPECT_NE(sign.errors[0].message.find("malformed sign"), std::string::npos);
  auto mode = ParseQuery("+d X b");
  ASSERT_FALSE(mode.ok());
  EXPECT_NE(mode.errors[0].message.find("malformed mode"), std::string::npos);
}

TEST(Parser, TotalOnGarbage) {
  std::mt19937_64 rng(3);
  const std::string alphabet = "abO~=>.,:+-#\n pdsw rule fact sup game claim";
  for (int i = 0; i < 2000; ++i) {
    std::string src;
    const int n = std::uniform_int_distribution<int>(0, 60)(rng);
    for (int k = 0; k < n; ++k)
      src += alphabet[std::uniform_int_distribution<std::size_t>(
          0, alphabet.size() - 1)(rng)];
    auto r = ParseTheory(src);
    for (const auto& e : r.errors) {
      EXPECT_FALSE(e.message.empty());
      EXPECT_GE(e.span.line, 1);
      EXPECT_GE(e.span.column, 1);
      EXPECT_GE(e.span.length, 1);
      EXPECT_TRUE(SpanInside(e, src)) << src << " -> " << e.ToString();
    }
    if (r.ok()) {
      auto again = ParseTheory(SerializeTheory(*r.value));
      ASSERT_TRUE(again.ok()) << src;
      EXPECT_EQ(*again.value, *r.value) << src;
    }
  }
}

}  // namespace
}  // namespace ddl

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

#include "ddl/argumentation.hpp"

#include <gtest/gtest.h>

#include <map>

#include "support/corpus.hpp"
#include "support/helpers.hpp"

namespace ddl {
namespace {

using testing::Theory;

std::multimap<ModalLiteral, std::set<RuleId>> ByConclusion(
    const std::vector<Argument>& args) {
  std::multimap<ModalLiteral, std::set<RuleId>> out;
  for (const auto& a : args)
    if (!a.is_fact()) out.emplace(a.conclusion, a.rules);
  return out;
}

TEST(Argumentation, S1UnionArguments) {
  const auto args =
      BuildArguments(testing::LoadFixture("s1.ddt").UnionTheory());
  const auto by = ByConclusion(args);
  const auto chains = [&](Mode m, Literal l) {
    std::set<std::set<RuleId>> out;
    auto [lo, hi] = by.equal_range({m, l});
    for (auto it = lo; it != hi; ++it) out.insert(it->second);
    return out;
  };
  const Mode e = Mode::kEvidential, o = Mode::kObligation;
  EXPECT_EQ(chains(e, {"b"}),
            (std::set<std::set<RuleId>>{{"r1"}, {"r2", "r3"}}));
  EXPECT_EQ(chains(e, {"c"}), (std::set<std::set<RuleId>>{{"r2"}}));
  EXPECT_EQ(chains(e, {"e"}), (std::set<std::set<RuleId>>{{"r2", "r4a"}}));
  EXPECT_EQ(chains(e, {"b", false}),
            (std::set<std::set<RuleId>>{{"r2", "r4a", "r5"}}));
  EXPECT_EQ(chains(o, {"b", false}),
            (std::set<std::set<RuleId>>{{"r4"}, {"r2", "r6"}}));
  EXPECT_EQ(std::count_if(args.begin(), args.end(),
                          [](const Argument& a) { return a.is_fact(); }),
            4);
}

TEST(Argumentation, S1UnionMatchesEngine) {
  const DiscrepancyReport r =
      DeltaEquivalenceCheck(testing::LoadFixture("s1.ddt").UnionTheory());
  EXPECT_TRUE(r.superiority_free);
  EXPECT_TRUE(r.clean());
  EXPECT_GT(r.literals_checked, 0u);
}

TEST(Argumentation, AmbiguityPropagates) {
  const DefeasibleTheory t = Theory(
      "fact a. fact b. fact g. rule r1: a => c. rule r2: b => ~c."
      " rule r3: g => e. rule r4: c => ~e.");
  AttackGraph g = BuildAttackGraph(t, BuildArguments(t));
  const auto justified = JustifiedConclusions(g, GroundedExtension(g));
  EXPECT_FALSE(justified.count({Mode::kEvidential, {"e"}}));
  EXPECT_FALSE(justified.count({Mode::kEvidential, {"c"}}));
  EXPECT_TRUE(justified.count({Mode::kEvidential, {"a"}}));
  EXPECT_TRUE(DeltaEquivalenceCheck(t).clean());
}

TEST(Argumentation, BlockedAttackerStillBlocks) {
  // r2 and r3 block each other; the attack on b survives.
  const DefeasibleTheory t = Theory(
      "fact a. fact x. rule r1: a => b. rule r2: x => c. rule r3: a => ~c."
      " rule r4: c => ~b.");
  AttackGraph g = BuildAttackGraph(t, BuildArguments(t));
  int rounds = 0;
  const auto justified = JustifiedConclusions(g, GroundedExtension(g, &rounds));
  EXPECT_FALSE(justified.count({Mode::kEvidential, {"b"}}));
  EXPECT_GE(rounds, 1);
  EXPECT_TRUE(DeltaEquivalenceCheck(t).clean());
}

TEST(Argumentation, SuperiorityRemovesAttack) {
  const DefeasibleTheory t =
      Theory("fact a. rule r1: a => b. rule r2: a => ~b. sup r1 > r2.");
  AttackGraph g = BuildAttackGraph(t, BuildArguments(t));
  const auto justified = JustifiedConclusions(g, GroundedExtension(g));
  EXPECT_TRUE(justified.count({Mode::kEvidential, {"b"}}));
  EXPECT_FALSE(justified.count({Mode::kEvidential, {"b", false}}));
  EXPECT_FALSE(DeltaEquivalenceCheck(t).superiority_free);
}

TEST(Argumentation, ModeRespected) {
  const DefeasibleTheory t =
      Theory("fact a. rule r1: a =>O b. rule r2: a => ~b.");
  AttackGraph g = BuildAttackGraph(t, BuildArguments(t));
  EXPECT_TRUE(g.attacks.empty());
}

TEST(Argumentation, RejectsAnnotations) {
  EXPECT_THROW(BuildArguments(Theory("fact a. rule r1: +d a => b.")),
               std::invalid_argument);
}

TEST(Argumentation, Limit) {
  std::string src = "fact a.";
  for (int i = 0; i < 8; ++i) {
    src += " rule x" + std::to_string(i) + ": a => p" + std::to_string(i) + ".";
    src += " rule y" + std::to_string(i) + ": a => p" + std::to_string(i) + ".";
  }
  src += " rule top: p0, p1, p2, p3, p4, p5, p6, p7 => q.";
  EXPECT_THROW(BuildArguments(Theory(src), 100), ArgumentLimitExceeded);
}

TEST(Argumentation, CorpusAgreement) {
  testing::CorpusConfig cfg;
  cfg.superiority = false;
  cfg.atom_acyclic = true;
  cfg.no_fact_conflicts = true;
  for (const auto& t : testing::Corpus(2024, 150, cfg)) {
    const DiscrepancyReport r = DeltaEquivalenceCheck(t);
    EXPECT_TRUE(r.clean()) << r.mismatches.front().literal.ToString();
  }
}

}  // namespace
}  // namespace ddl

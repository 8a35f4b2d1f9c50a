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

// Seeded random theories and setups for the property suites.

#ifndef DDL_TESTS_SUPPORT_CORPUS_HPP_
#define DDL_TESTS_SUPPORT_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ddl/theory.hpp"

namespace ddl::testing {

struct CorpusConfig {
  int max_atoms = 10;
  int max_rules = 14;
  double deontic_rule_fraction = 0.3;
  double fact_probability = 0.3;
  double modal_fact_probability = 0.05;
  double modal_antecedent_probability = 0.15;
  double superiority_probability = 0.5;
  double annotation_probability = 0.0;
  bool superiority = true;
  // Body atoms strictly precede the head atom, so no rule chain loops.
  bool atom_acyclic = false;
  // Drop facts whose complement heads a rule of the same mode.
  bool no_fact_conflicts = false;
};

// Acyclic superiority: pairs are oriented along a random rule permutation.
DefeasibleTheory RandomTheory(std::mt19937_64& rng, const CorpusConfig& cfg);

// `count` theories from a fixed seed.
std::vector<DefeasibleTheory> Corpus(std::uint64_t seed, int count,
                                     const CorpusConfig& cfg);

// A random GameSetup: rules split across common / pr / def, a claim of
// one or two atoms, random standards.
GameSetup RandomSetup(std::mt19937_64& rng, const CorpusConfig& cfg);

std::string FixturePath(const std::string& name);
std::string ReadFixture(const std::string& name);
GameSetup LoadFixture(const std::string& name);

}  // namespace ddl::testing

#endif  // DDL_TESTS_SUPPORT_CORPUS_HPP_

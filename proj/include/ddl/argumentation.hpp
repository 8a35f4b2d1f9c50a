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

// Structured arguments and grounded semantics, used as an independent
// reference for the ambiguity-propagating tag. Nothing here calls the
// inference engine except DeltaEquivalenceCheck, which compares the two.

#ifndef DDL_ARGUMENTATION_HPP_
#define DDL_ARGUMENTATION_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ddl/engine.hpp"
#include "ddl/theory.hpp"

namespace ddl {

using ArgumentId = std::size_t;

struct Argument {
  ModalLiteral conclusion;
  std::optional<RuleId> top_rule;  // nullopt for a fact
  // One subargument per antecedent of top_rule, as indices into the
  // owning collection.
  std::vector<ArgumentId> subarguments;
  // Every rule used anywhere in the tree.
  std::set<RuleId> rules;

  bool is_fact() const { return !top_rule.has_value(); }
};

class ArgumentLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All finite arguments whose root-to-leaf paths repeat no rule. An
// antecedent that is itself a fact is only ever backed by the fact.
// Throws std::invalid_argument on annotated theories and
// ArgumentLimitExceeded past `limit` arguments.
std::vector<Argument> BuildArguments(const DefeasibleTheory& theory,
                                     std::size_t limit = 200000);

struct AttackGraph {
  std::vector<Argument> arguments;
  std::set<std::pair<ArgumentId, ArgumentId>> attacks;  // (attacker, target)
};

// A attacks B iff A concludes the same-mode complement of a rule-based
// node of B and that node's rule is not superior to A's top rule.
AttackGraph BuildAttackGraph(const DefeasibleTheory& theory,
                             std::vector<Argument> arguments);

// Least fixpoint of the characteristic function. `rounds`, when given,
// receives the number of iterations applied.
std::set<ArgumentId> GroundedExtension(const AttackGraph& graph,
                                       int* rounds = nullptr);

// Conclusions of grounded-accepted arguments.
std::set<ModalLiteral> JustifiedConclusions(const AttackGraph& graph,
                                            const std::set<ArgumentId>& ext);

struct Discrepancy {
  ModalLiteral literal;
  Status engine_delta;  // status of +delta in the engine
  bool justified;
};

struct DiscrepancyReport {
  std::vector<Discrepancy> mismatches;
  std::size_t literals_checked = 0;
  std::size_t arguments = 0;
  bool superiority_free = true;

  bool clean() const { return mismatches.empty(); }
};

// For every (mode, literal) of the theory: justified literals must be
// +delta and unjustified ones -delta. The comparison is only
// normative on superiority-free theories; `superiority_free` records
// which case ran.
DiscrepancyReport DeltaEquivalenceCheck(const DefeasibleTheory& theory);

}  // namespace ddl

#endif  // DDL_ARGUMENTATION_HPP_

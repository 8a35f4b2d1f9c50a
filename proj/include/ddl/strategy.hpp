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

// Omniscient game analysis (both pools visible) and scripted playouts.

#ifndef DDL_STRATEGY_HPP_
#define DDL_STRATEGY_HPP_

#include <cstddef>
#include <optional>
#include <set>

#include "ddl/game.hpp"

namespace ddl {

inline constexpr int kDefaultSearchBound = 20;

class BoundExceeded : public GameError {
 public:
  using GameError::GameError;
};

// Variant rules for the search. With pr_commits_at_opening, Pr discloses
// everything it will ever disclose in the opening and can only pass later.
struct SearchOptions {
  bool pr_commits_at_opening = false;
};

struct SearchStats {
  std::size_t states_explored = 0;
};

// Value of an accepted state under optimal play by both sides. Pr prefers
// PR over STALLED over DEF; Def the reverse.
Outcome SolveFrom(const GameState& state, SearchStats* stats = nullptr,
                  SearchOptions options = {});

// Optimal-play outcome over all accepted openings; DEF when none is
// accepted. Throws BoundExceeded when the two private pools together hold
// more than `bound` rules.
Outcome ExhaustiveWinner(const GameSetup& setup, int bound = kDefaultSearchBound);

// Smallest accepted opening that wins for Pr under optimal play, ties by
// lexicographic rule-id order. Same bound as ExhaustiveWinner.
std::optional<std::set<RuleId>> MinimalWinningOpening(
    const GameSetup& setup, int bound = kDefaultSearchBound);

struct Analysis {
  Outcome winner = Outcome::kDefSucceeds;
  std::optional<std::set<RuleId>> minimal_opening;
  std::size_t states_explored = 0;
};

Analysis Analyze(const GameSetup& setup, int bound = kDefaultSearchBound,
                 SearchOptions options = {});

enum class Policy { kGreedyMinimal, kFullDisclosure };

// Deterministic playout. Each side only looks at the common theory and its
// own pool. A trace without turns means no opening was accepted (DEF).
GameTrace AutoPlay(const GameSetup& setup, Policy policy);

}  // namespace ddl

#endif  // DDL_STRATEGY_HPP_

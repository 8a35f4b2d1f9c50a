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

// Criminal-proceeding dialogue game between prosecution (Pr) and defence
// (Def) over a shared defeasible theory and two private rule pools.
//
// Turn 0 is Pr's opening; play then alternates Def, Pr, ... A move
// discloses a subset of the mover's pool (possibly empty, a pass). A game
// ends when
//   * Def succeeds: Pr's pool is empty and some claim element fails, or
//   * Pr succeeds: Def's pool is empty and every claim element holds, or
//   * both pools are empty and neither holds (stalled), or
//   * a player passes without meeting their goal and no subset of their
//     remaining pool would meet it (the player concedes), or
//   * two passes occur in a row.
// States are immutable; ApplyMove returns a new one.

#ifndef DDL_GAME_HPP_
#define DDL_GAME_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddl/engine.hpp"
#include "ddl/theory.hpp"

namespace ddl {

enum class Outcome { kOngoing, kPrSucceeds, kDefSucceeds, kStalled };

std::string_view OutcomeName(Outcome o);  // "ongoing", "pr_succeeds", ...
inline bool IsTerminal(Outcome o) { return o != Outcome::kOngoing; }

struct Move {
  Player player = Player::kPr;
  std::set<RuleId> rules;  // empty = pass
  std::vector<ModalLiteral> targets;

  bool is_pass() const { return rules.empty(); }
};

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TargetCheck {
  ModalLiteral target;
  bool determined_before = false;
  // Post-condition disjuncts newly satisfied by the move, e.g.
  // "(i) +s ~b".
  std::vector<std::string> satisfied;
};

struct LegalityReport {
  bool legal = true;
  std::vector<std::string> violations;
  std::vector<TargetCheck> targets;
};

class IllegalMove : public GameError {
 public:
  IllegalMove(int turn, LegalityReport report);
  int turn() const { return turn_; }
  const LegalityReport& report() const { return report_; }

 private:
  int turn_;
  LegalityReport report_;
};

// Immutable per-game data plus a memo of conclusion sets keyed by the set
// of disclosed rules. The memo is the only mutable member; entries are
// computed deterministically, so concurrent first writes agree.
class GameContext {
 public:
  explicit GameContext(GameSetup setup);

  const GameSetup& setup() const { return setup_; }
  const Rule& rule(const RuleId& id) const { return rules_.at(id); }
  DefeasibleTheory TheoryFor(const std::set<RuleId>& common) const;
  std::shared_ptr<const ConclusionSet> ConclusionsFor(
      const std::set<RuleId>& common) const;

 private:
  GameSetup setup_;
  std::map<RuleId, Rule> rules_;
  mutable std::mutex mu_;
  mutable std::map<std::set<RuleId>, std::shared_ptr<const ConclusionSet>>
      memo_;
};

class GameState {
 public:
  // Index of the last turn played; the opening is turn 0.
  int turn() const { return turn_; }
  Player next_player() const {
    return turn_ % 2 == 0 ? Player::kDef : Player::kPr;
  }
  const GameSetup& setup() const { return ctx_->setup(); }
  const Claim& claim() const { return setup().claim; }
  DefeasibleTheory common_theory() const { return ctx_->TheoryFor(common_); }
  const std::set<RuleId>& common_rules() const { return common_; }
  const std::set<RuleId>& pool(Player p) const {
    return p == Player::kPr ? pr_pool_ : def_pool_;
  }
  const ConclusionSet& conclusions() const { return *conclusions_; }
  std::shared_ptr<const ConclusionSet> conclusions_ptr() const {
    return conclusions_;
  }
  int consecutive_passes() const { return passes_; }
  // Outcome fixed by the pass rules, if any.
  std::optional<Outcome> decided() const { return decided_; }
  // decided() if set, else the pool-based termination conditions.
  Outcome outcome() const;

  // Conclusions of the theory after hypothetically disclosing `rules`.
  std::shared_ptr<const ConclusionSet> ConclusionsWith(
      const std::set<RuleId>& rules) const;

  const std::shared_ptr<const GameContext>& context() const { return ctx_; }

 private:
  friend struct GameStateAccess;
  GameState() = default;

  std::shared_ptr<const GameContext> ctx_;
  std::set<RuleId> common_, pr_pool_, def_pool_;
  std::shared_ptr<const ConclusionSet> conclusions_;
  int turn_ = 0;
  int passes_ = 0;
  std::optional<Outcome> decided_;
};

struct OpeningResult {
  std::optional<GameState> state;
  std::vector<std::string> reasons;  // per failing claim element

  bool accepted() const { return state.has_value(); }
};

// Throws GameError if `opening` is not a subset of Pr's pool or the claim
// is empty. Acceptance is checked on the theory after disclosure.
OpeningResult OpenGame(const GameSetup& setup, const std::set<RuleId>& opening);
OpeningResult OpenGame(std::shared_ptr<const GameContext> ctx,
                       const std::set<RuleId>& opening);

// Throws GameError on a terminated game, the wrong player, or rules the
// mover does not hold.
LegalityReport LegalMove(const GameState& state, const Move& move);

// Throws IllegalMove when LegalMove rejects the move.
GameState ApplyMove(const GameState& state, const Move& move);

// Pool-based termination conditions only (ignores the pass rules).
Outcome TerminationStatus(const GameState& state);

// Every claim element holds at the game's standards.
bool ClaimEstablished(const ConclusionSet& cs, const GameSetup& setup);
// Some claim element constructively fails at the game's standards.
bool ClaimRefuted(const ConclusionSet& cs, const GameSetup& setup);
bool GoalMet(Player p, const ConclusionSet& cs, const GameSetup& setup);

// Targets for which disclosing `rules` by the next player would be a
// legal move; empty iff no legal move discloses exactly these rules.
std::vector<ModalLiteral> EligibleTargets(const GameState& state,
                                          const std::set<RuleId>& rules);

struct TurnRecord {
  Move move;
  std::vector<TaggedLiteral> newly_proved;
  std::shared_ptr<const ConclusionSet> snapshot;
};

struct GameTrace {
  GameSetup setup;
  std::vector<TurnRecord> turns;
  Outcome outcome = Outcome::kOngoing;
  // Conclusions of the last theory (D^0 if no opening was accepted).
  std::shared_ptr<const ConclusionSet> final_conclusions;
};

// Conclusions present in `after` but not in `before`.
std::vector<TaggedLiteral> NewlyProved(const ConclusionSet& before,
                                       const ConclusionSet& after);

// Replays moves from the setup; the first move is the opening. Stops at
// the first terminal state. Throws IllegalMove (turn index, report) for a
// rejected opening, an illegal move or a move after termination.
GameTrace Replay(const GameSetup& setup, const std::vector<Move>& moves);

// Moves file: one statement per line, e.g.
//   pr: r1, r4 targets E b, O ~b.
//   def: pass.
// Targets default to mode E when the mode is omitted.
struct MovesParse {
  std::vector<Move> moves;
  std::vector<std::string> errors;
};
MovesParse ParseMoves(std::string_view text);

}  // namespace ddl

#endif  // DDL_GAME_HPP_

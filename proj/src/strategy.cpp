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

#include "ddl/strategy.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace ddl {
namespace {

// Subsets of `pool` ordered by size, then lexicographically.
std::vector<std::set<RuleId>> OrderedSubsets(const std::set<RuleId>& pool,
                                             bool include_empty) {
  const std::vector<RuleId> items(pool.begin(), pool.end());
  std::vector<std::set<RuleId>> out;
  std::vector<std::size_t> idx;
  for (std::size_t k = include_empty ? 0 : 1; k <= items.size(); ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::set<RuleId> s;
      for (std::size_t i : idx) s.insert(items[i]);
      out.push_back(std::move(s));
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

int Rank(Outcome o) {  // from Pr's side
  switch (o) {
    case Outcome::kPrSucceeds: return 2;
    case Outcome::kStalled: return 1;
    default: return 0;
  }
}

void CheckBound(const GameSetup& setup, int bound) {
  const std::size_t n = setup.pr_private.size() + setup.def_private.size();
  if (n > static_cast<std::size_t>(std::max(bound, 0)))
    throw BoundExceeded("private pools hold " + std::to_string(n) +
                        " rules, more than the search bound " +
                        std::to_string(bound));
}

using StateKey =
    std::tuple<std::set<RuleId>, std::set<RuleId>, Player, int>;

class Solver {
 public:
  explicit Solver(SearchOptions options = {}) : options_(options) {}

  Outcome Solve(const GameState& s) {
    const Outcome now = s.outcome();
    if (IsTerminal(now)) return now;
    StateKey key{s.pool(Player::kPr), s.pool(Player::kDef), s.next_player(),
                 s.consecutive_passes()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Player mover = s.next_player();
    int best = mover == Player::kPr ? -1 : 3;
    Outcome best_outcome = Outcome::kStalled;
    const auto consider = [&](const Move& m) {
      const Outcome v = Solve(ApplyMove(s, m));
      const int r = Rank(v);
      if (mover == Player::kPr ? r > best : r < best) {
        best = r;
        best_outcome = v;
      }
    };
    consider(Move{mover, {}, {}});
    const bool frozen =
        mover == Player::kPr && options_.pr_commits_at_opening;
    for (auto& subset : OrderedSubsets(s.pool(mover), false)) {
      if (frozen) break;
      if ((mover == Player::kPr && best == 2) ||
          (mover == Player::kDef && best == 0))
        break;
      auto targets = EligibleTargets(s, subset);
      if (targets.empty()) continue;
      consider(Move{mover, std::move(subset), std::move(targets)});
    }
    memo_.emplace(std::move(key), best_outcome);
    return best_outcome;
  }

  std::size_t explored() const { return memo_.size(); }

 private:
  SearchOptions options_;
  std::map<StateKey, Outcome> memo_;
};

// Per-component progress toward establishing the claim.
int Score(const ConclusionSet& cs, const GameSetup& setup) {
  int score = 0;
  for (const auto& a : setup.claim.evidential) {
    GameSetup one = setup;
    one.claim.evidential = {a};
    if (ClaimEstablished(cs, one))
      ++score;
    else if (ClaimRefuted(cs, one))
      --score;
  }
  return score;
}

}  // namespace

Outcome SolveFrom(const GameState& state, SearchStats* stats,
                  SearchOptions options) {
  Solver solver(options);
  const Outcome o = solver.Solve(state);
  if (stats) stats->states_explored += solver.explored();
  return o;
}

Analysis Analyze(const GameSetup& setup, int bound, SearchOptions options) {
  CheckBound(setup, bound);
  auto ctx = std::make_shared<const GameContext>(setup);
  std::set<RuleId> pool;
  for (const auto& r : setup.pr_private) pool.insert(r.id);
  // The pools determine the disclosed set, so one memo serves every
  // opening.
  Solver solver(options);
  Analysis a;
  int best = -1;
  for (const auto& opening : OrderedSubsets(pool, true)) {
    OpeningResult opened = OpenGame(ctx, opening);
    if (!opened.accepted()) continue;
    const Outcome v = solver.Solve(*opened.state);
    if (Rank(v) > best) {
      best = Rank(v);
      a.winner = v;
    }
    if (v == Outcome::kPrSucceeds && !a.minimal_opening)
      a.minimal_opening = opening;
  }
  if (best < 0) a.winner = Outcome::kDefSucceeds;
  a.states_explored = solver.explored();
  return a;
}

Outcome ExhaustiveWinner(const GameSetup& setup, int bound) {
  return Analyze(setup, bound).winner;
}

std::optional<std::set<RuleId>> MinimalWinningOpening(const GameSetup& setup,
                                                      int bound) {
  CheckBound(setup, bound);
  auto ctx = std::make_shared<const GameContext>(setup);
  std::set<RuleId> pool;
  for (const auto& r : setup.pr_private) pool.insert(r.id);
  Solver solver;
  for (const auto& opening : OrderedSubsets(pool, true)) {
    OpeningResult opened = OpenGame(ctx, opening);
    if (opened.accepted() &&
        solver.Solve(*opened.state) == Outcome::kPrSucceeds)
      return opening;
  }
  return std::nullopt;
}

GameTrace AutoPlay(const GameSetup& setup, Policy policy) {
  auto ctx = std::make_shared<const GameContext>(setup);
  std::set<RuleId> pool;
  for (const auto& r : setup.pr_private) pool.insert(r.id);

  std::vector<Move> moves;
  std::optional<GameState> state;
  const auto open = [&](const std::set<RuleId>& opening) {
    OpeningResult r = OpenGame(ctx, opening);
    if (!r.accepted()) return false;
    state = std::move(r.state);
    Move m{Player::kPr, opening, {}};
    for (const auto& a : setup.claim.evidential)
      m.targets.push_back({Mode::kEvidential, a});
    for (const auto& o : setup.claim.Deontic()) m.targets.push_back(o);
    moves.push_back(std::move(m));
    return true;
  };
  if (policy == Policy::kFullDisclosure) {
    open(pool);
  } else {
    for (const auto& opening : OrderedSubsets(pool, true))
      if (open(opening)) break;
  }
  if (!state) {
    GameTrace empty = Replay(setup, {});
    empty.outcome = Outcome::kDefSucceeds;
    return empty;
  }

  while (!IsTerminal(state->outcome())) {
    const Player mover = state->next_player();
    Move move{mover, {}, {}};
    if (policy == Policy::kFullDisclosure) {
      const auto& own = state->pool(mover);
      auto targets = EligibleTargets(*state, own);
      if (!targets.empty()) move = Move{mover, own, std::move(targets)};
    } else {
      const int now = Score(state->conclusions(), setup);
      for (auto& subset : OrderedSubsets(state->pool(mover), false)) {
        auto targets = EligibleTargets(*state, subset);
        if (targets.empty()) continue;
        const int next = Score(*state->ConclusionsWith(subset), setup);
        if (mover == Player::kPr ? next > now : next < now) {
          move = Move{mover, std::move(subset), std::move(targets)};
          break;
        }
      }
    }
    state = ApplyMove(*state, move);
    moves.push_back(std::move(move));
  }
  return Replay(setup, moves);
}

}  // namespace ddl

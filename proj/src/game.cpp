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

#include "ddl/game.hpp"

#include <algorithm>
#include <cstdint>

#include "lexer.hpp"

namespace ddl {

std::string_view OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kOngoing: return "ongoing";
    case Outcome::kPrSucceeds: return "pr_succeeds";
    case Outcome::kDefSucceeds: return "def_succeeds";
    case Outcome::kStalled: return "stalled";
  }
  return "?";
}

namespace {

std::string JoinViolations(const LegalityReport& r) {
  std::string out;
  for (const auto& v : r.violations) out += (out.empty() ? "" : "; ") + v;
  return out;
}

}  // namespace

IllegalMove::IllegalMove(int turn, LegalityReport report)
    : GameError("illegal move at turn " + std::to_string(turn) + ": " +
                JoinViolations(report)),
      turn_(turn),
      report_(std::move(report)) {}

GameContext::GameContext(GameSetup setup) : setup_(std::move(setup)) {
  const ValidationReport v = ValidateSetup(setup_);
  if (!v.ok()) throw GameError("invalid game setup: " + v.errors.front());
  for (const auto* pool :
       {&setup_.common_rules, &setup_.pr_private, &setup_.def_private})
    for (const auto& r : *pool) rules_.emplace(r.id, r);
}

DefeasibleTheory GameContext::TheoryFor(const std::set<RuleId>& common) const {
  DefeasibleTheory t;
  t.facts = setup_.common_facts;
  for (const auto& id : common) t.rules.push_back(rules_.at(id));
  t.superiority = RestrictSuperiority(setup_.superiority, common);
  return t;
}

std::shared_ptr<const ConclusionSet> GameContext::ConclusionsFor(
    const std::set<RuleId>& common) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(common); it != memo_.end()) return it->second;
  }
  auto cs = std::make_shared<const ConclusionSet>(
      ComputeConclusions(TheoryFor(common)));
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(common, std::move(cs)).first->second;
}

struct GameStateAccess {
  static GameState Make(std::shared_ptr<const GameContext> ctx,
                        std::set<RuleId> common, std::set<RuleId> pr,
                        std::set<RuleId> def, int turn, int passes) {
    GameState s;
    s.conclusions_ = ctx->ConclusionsFor(common);
    s.ctx_ = std::move(ctx);
    s.common_ = std::move(common);
    s.pr_pool_ = std::move(pr);
    s.def_pool_ = std::move(def);
    s.turn_ = turn;
    s.passes_ = passes;
    return s;
  }
  static void Decide(GameState& s, Outcome o) { s.decided_ = o; }
};

Outcome GameState::outcome() const {
  return decided_ ? *decided_ : TerminationStatus(*this);
}

std::shared_ptr<const ConclusionSet> GameState::ConclusionsWith(
    const std::set<RuleId>& rules) const {
  std::set<RuleId> common = common_;
  common.insert(rules.begin(), rules.end());
  return ctx_->ConclusionsFor(common);
}

bool ClaimEstablished(const ConclusionSet& cs, const GameSetup& setup) {
  return std::all_of(
      setup.claim.evidential.begin(), setup.claim.evidential.end(),
      [&](const Literal& a) {
        return cs.status(setup.evidential_standard, Mode::kEvidential, a) ==
                   Status::kProved &&
               cs.status(setup.deontic_standard, Mode::kObligation,
                         Complement(a)) == Status::kProved;
      });
}

bool ClaimRefuted(const ConclusionSet& cs, const GameSetup& setup) {
  const TagKind ev = setup.evidential_standard;
  const TagKind de = setup.deontic_standard;
  return std::any_of(
      setup.claim.evidential.begin(), setup.claim.evidential.end(),
      [&](const Literal& a) {
        const Literal na = Complement(a);
        const bool deontic =
            cs.status(de, Mode::kObligation, na) == Status::kRefuted ||
            cs.status(de, Mode::kObligation, a) == Status::kProved;
        const bool evidential =
            cs.status(ev, Mode::kEvidential, na) == Status::kProved ||
            cs.status(ev, Mode::kEvidential, a) == Status::kRefuted;
        return deontic || evidential;
      });
}

bool GoalMet(Player p, const ConclusionSet& cs, const GameSetup& setup) {
  return p == Player::kPr ? ClaimEstablished(cs, setup)
                          : ClaimRefuted(cs, setup);
}

Outcome TerminationStatus(const GameState& state) {
  const bool pr_empty = state.pool(Player::kPr).empty();
  const bool def_empty = state.pool(Player::kDef).empty();
  const auto& cs = state.conclusions();
  if (pr_empty && ClaimRefuted(cs, state.setup())) return Outcome::kDefSucceeds;
  if (def_empty && ClaimEstablished(cs, state.setup()))
    return Outcome::kPrSucceeds;
  if (pr_empty && def_empty) return Outcome::kStalled;
  return Outcome::kOngoing;
}

OpeningResult OpenGame(std::shared_ptr<const GameContext> ctx,
                       const std::set<RuleId>& opening) {
  const GameSetup& setup = ctx->setup();
  if (setup.claim.empty()) throw GameError("the claim is empty");
  std::set<RuleId> common, pr, def;
  for (const auto& r : setup.common_rules) common.insert(r.id);
  for (const auto& r : setup.pr_private) pr.insert(r.id);
  for (const auto& r : setup.def_private) def.insert(r.id);
  for (const auto& id : opening) {
    if (!pr.count(id))
      throw GameError("opening rule '" + id + "' is not in pr's pool");
    pr.erase(id);
    common.insert(id);
  }
  OpeningResult result;
  GameState s = GameStateAccess::Make(std::move(ctx), std::move(common),
                                      std::move(pr), std::move(def), 0, 0);
  const auto& cs = s.conclusions();
  for (const auto& a : setup.claim.evidential) {
    const TaggedLiteral ev{Sign::kPlus, setup.evidential_standard,
                           Mode::kEvidential, a};
    const TaggedLiteral de{Sign::kPlus, setup.deontic_standard,
                           Mode::kObligation, Complement(a)};
    for (const auto& q : {ev, de})
      if (!cs.Proves(q))
        result.reasons.push_back(a.ToString() + ": " + q.ToString() +
                                 " is " +
                                 std::string(StatusName(cs.Query(q))));
  }
  if (result.reasons.empty()) result.state = std::move(s);
  return result;
}

OpeningResult OpenGame(const GameSetup& setup,
                       const std::set<RuleId>& opening) {
  return OpenGame(std::make_shared<const GameContext>(setup), opening);
}

namespace {

struct Disjunct {
  std::string_view clause;
  TaggedLiteral conclusion;
};

std::vector<Disjunct> PostDisjuncts(Player p, const ModalLiteral& target,
                                    const GameSetup& setup) {
  std::vector<Disjunct> out;
  const Literal& l = target.literal;
  const Literal nl = Complement(l);
  if (target.mode == Mode::kEvidential) {
    const Mode e = Mode::kEvidential;
    for (TagKind t : kAllTags) {
      out.push_back({"(i)", {Sign::kPlus, t, e, nl}});
      out.push_back({"(i)", {Sign::kMinus, t, e, nl}});
    }
    for (TagKind t : kAllTags) {
      out.push_back({"(ii)", {Sign::kPlus, t, e, l}});
      out.push_back({"(ii)", {Sign::kMinus, t, e, l}});
    }
    if (p == Player::kPr && setup.claim.Contains(l))
      out.push_back(
          {"(claim)", {Sign::kPlus, setup.evidential_standard, e, l}});
  } else {
    const Mode o = Mode::kObligation;
    for (TagKind t : kAllTags) {
      out.push_back({"(iii)", {Sign::kPlus, t, o, nl}});
      out.push_back({"(iii)", {Sign::kMinus, t, o, l}});
    }
    for (TagKind t : kAllTags) out.push_back({"(iv)", {Sign::kPlus, t, o, l}});
  }
  return out;
}

bool DeterminedIn(const ConclusionSet& cs, const Literal& l) {
  for (TagKind t : kAllTags)
    for (Mode m : kAllModes)
      if (cs.status(t, m, l) != Status::kUndetermined) return true;
  return false;
}

TargetCheck CheckTarget(Player p, const ModalLiteral& target,
                        const ConclusionSet& before, const ConclusionSet& after,
                        const GameSetup& setup) {
  TargetCheck tc{target, DeterminedIn(before, target.literal), {}};
  for (const auto& d : PostDisjuncts(p, target, setup))
    if (after.Proves(d.conclusion) && !before.Proves(d.conclusion))
      tc.satisfied.push_back(std::string(d.clause) + " " +
                             d.conclusion.ToString());
  return tc;
}

void CheckTurnAndOwnership(const GameState& state, const Move& move) {
  if (IsTerminal(state.outcome()))
    throw GameError("the game has already terminated (" +
                    std::string(OutcomeName(state.outcome())) + ")");
  if (move.player != state.next_player())
    throw GameError("it is " + std::string(PlayerName(state.next_player())) +
                    "'s turn, not " + std::string(PlayerName(move.player)) +
                    "'s");
  const auto& pool = state.pool(move.player);
  for (const auto& id : move.rules)
    if (!pool.count(id))
      throw GameError("rule '" + id + "' is not in " +
                      std::string(PlayerName(move.player)) + "'s pool");
}

bool AnySubsetMeetsGoal(const GameState& state, Player p) {
  const std::vector<RuleId> pool(state.pool(p).begin(), state.pool(p).end());
  if (pool.size() >= 31) throw GameError("pool too large for subset check");
  const std::uint32_t n = 1u << pool.size();
  for (std::uint32_t mask = 1; mask < n; ++mask) {
    std::set<RuleId> subset;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) subset.insert(pool[i]);
    if (GoalMet(p, *state.ConclusionsWith(subset), state.setup())) return true;
  }
  return false;
}

}  // namespace

LegalityReport LegalMove(const GameState& state, const Move& move) {
  CheckTurnAndOwnership(state, move);
  LegalityReport report;
  if (move.is_pass()) {
    if (!move.targets.empty()) {
      report.legal = false;
      report.violations.push_back("a pass declares no targets");
    }
    return report;
  }
  if (move.targets.empty()) {
    report.legal = false;
    report.violations.push_back("no targets declared");
    return report;
  }
  const ConclusionSet& before = state.conclusions();
  const auto after = state.ConclusionsWith(move.rules);
  for (const auto& target : move.targets) {
    TargetCheck tc =
        CheckTarget(move.player, target, before, *after, state.setup());
    if (!tc.determined_before) {
      report.legal = false;
      report.violations.push_back("pre-clause (a): " + target.ToString() +
                                  " has no determined conclusion before the "
                                  "move");
    }
    if (tc.satisfied.empty()) {
      report.legal = false;
      report.violations.push_back("post-clause (b): no post-condition "
                                  "disjunct newly satisfied for " +
                                  target.ToString());
    }
    report.targets.push_back(std::move(tc));
  }
  return report;
}

GameState ApplyMove(const GameState& state, const Move& move) {
  LegalityReport report = LegalMove(state, move);
  if (!report.legal) throw IllegalMove(state.turn() + 1, std::move(report));
  const Player mover = move.player;
  std::set<RuleId> common = state.common_rules();
  std::set<RuleId> pr = state.pool(Player::kPr);
  std::set<RuleId> def = state.pool(Player::kDef);
  auto& own = mover == Player::kPr ? pr : def;
  for (const auto& id : move.rules) {
    own.erase(id);
    common.insert(id);
  }
  const int passes = move.is_pass() ? state.consecutive_passes() + 1 : 0;
  GameState next = GameStateAccess::Make(state.context(), std::move(common),
                                         std::move(pr), std::move(def),
                                         state.turn() + 1, passes);
  if (!move.is_pass() || IsTerminal(TerminationStatus(next))) return next;

  const auto& cs = next.conclusions();
  const GameSetup& setup = next.setup();
  if (!GoalMet(mover, cs, setup) && !AnySubsetMeetsGoal(next, mover)) {
    // Concession.
    GameStateAccess::Decide(next, mover == Player::kPr
                                      ? Outcome::kDefSucceeds
                                      : Outcome::kPrSucceeds);
  } else if (passes >= 2) {
    GameStateAccess::Decide(next, ClaimRefuted(cs, setup)
                                      ? Outcome::kDefSucceeds
                                  : ClaimEstablished(cs, setup)
                                      ? Outcome::kPrSucceeds
                                      : Outcome::kStalled);
  }
  return next;
}

std::vector<ModalLiteral> EligibleTargets(const GameState& state,
                                          const std::set<RuleId>& rules) {
  std::vector<ModalLiteral> out;
  if (rules.empty()) return out;
  const ConclusionSet& before = state.conclusions();
  const auto after = state.ConclusionsWith(rules);
  std::set<Literal> vocabulary(before.literals().begin(),
                               before.literals().end());
  vocabulary.insert(after->literals().begin(), after->literals().end());
  for (const Literal& l : vocabulary) {
    for (Mode m : kAllModes) {
      const ModalLiteral target{m, l};
      const TargetCheck tc = CheckTarget(state.next_player(), target, before,
                                         *after, state.setup());
      if (tc.determined_before && !tc.satisfied.empty()) out.push_back(target);
    }
  }
  return out;
}

std::vector<TaggedLiteral> NewlyProved(const ConclusionSet& before,
                                       const ConclusionSet& after) {
  std::vector<TaggedLiteral> out;
  for (const auto& c : after.Conclusions())
    if (!before.Proves(c)) out.push_back(c);
  return out;
}

GameTrace Replay(const GameSetup& setup, const std::vector<Move>& moves) {
  auto ctx = std::make_shared<const GameContext>(setup);
  GameTrace trace;
  trace.setup = setup;
  std::set<RuleId> base;
  for (const auto& r : setup.common_rules) base.insert(r.id);
  trace.final_conclusions = ctx->ConclusionsFor(base);
  if (moves.empty()) return trace;

  const auto fail = [](int turn, std::string why) {
    LegalityReport r;
    r.legal = false;
    r.violations.push_back(std::move(why));
    return IllegalMove(turn, std::move(r));
  };
  const Move& opening = moves.front();
  if (opening.player != Player::kPr)
    throw fail(0, "the opening move belongs to pr");
  OpeningResult opened;
  try {
    opened = OpenGame(ctx, opening.rules);
  } catch (const GameError& e) {
    throw fail(0, e.what());
  }
  if (!opened.accepted()) {
    LegalityReport r;
    r.legal = false;
    for (const auto& why : opened.reasons)
      r.violations.push_back("opening: " + why);
    throw IllegalMove(0, std::move(r));
  }
  GameState state = *opened.state;
  trace.turns.push_back({opening,
                         NewlyProved(*trace.final_conclusions,
                                     state.conclusions()),
                         state.conclusions_ptr()});
  for (std::size_t i = 1; i < moves.size(); ++i) {
    if (IsTerminal(state.outcome()))
      throw fail(static_cast<int>(i),
                 "the game already terminated (" +
                     std::string(OutcomeName(state.outcome())) + ")");
    GameState next = state;
    try {
      next = ApplyMove(state, moves[i]);
    } catch (const IllegalMove&) {
      throw;
    } catch (const GameError& e) {
      throw fail(static_cast<int>(i), e.what());
    }
    trace.turns.push_back(
        {moves[i], NewlyProved(state.conclusions(), next.conclusions()),
         next.conclusions_ptr()});
    state = std::move(next);
  }
  trace.outcome = state.outcome();
  trace.final_conclusions = state.conclusions_ptr();
  return trace;
}

MovesParse ParseMoves(std::string_view text) {
  using detail::Tok;
  MovesParse out;
  detail::TokenStream ts(detail::Tokenize(text));
  while (!ts.AtEnd()) {
    try {
      Move m;
      const detail::Token& who = ts.Peek();
      const std::string player = detail::ExpectIdent(ts, "pr or def");
      if (player != "pr" && player != "def")
        detail::Fail(who, "unknown player '" + player + "'", {"pr", "def"});
      m.player = player == "pr" ? Player::kPr : Player::kDef;
      detail::Expect(ts, Tok::kColon, "':'");
      if (ts.Peek().kind == Tok::kIdent && ts.Peek().text == "pass") {
        ts.Next();
      } else {
        do {
          m.rules.insert(detail::ExpectIdent(ts, "rule id"));
        } while (ts.Accept(Tok::kComma));
        if (ts.Peek().kind == Tok::kIdent && ts.Peek().text == "targets") {
          ts.Next();
          do {
            m.targets.push_back(detail::ParseModalLiteralTokens(ts));
          } while (ts.Accept(Tok::kComma));
        }
      }
      detail::Expect(ts, Tok::kDot, "'.'");
      out.moves.push_back(std::move(m));
    } catch (const detail::StatementError& e) {
      out.errors.push_back(e.error.ToString());
      ts.Recover();
    }
  }
  return out;
}

}  // namespace ddl

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

// ddlgame: command-line front end.
//
// Exit codes: 0 success, 1 parse or validation failure (also bad usage),
// 2 illegal move in a moves file, 3 search bound exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ddl/argumentation.hpp"
#include "ddl/engine.hpp"
#include "ddl/game.hpp"
#include "ddl/json.hpp"
#include "ddl/parser.hpp"
#include "ddl/permission.hpp"
#include "ddl/strategy.hpp"
#include "ddl/theory.hpp"

namespace {

using namespace ddl;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitIllegalMove = 2;
constexpr int kExitBound = 3;

// Aborts the current command with an exit code; the message goes to
// standard error.
struct Failure {
  int code;
  std::string message;
};

struct Globals {
  bool json = false;
  std::string evidential_standard;
  std::string deontic_standard;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInput, path + ": cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TagKind StandardFlag(const std::string& value, bool deontic) {
  const auto tag = value.size() == 1 ? TagFromCode(value[0]) : std::nullopt;
  if (!tag || (deontic && *tag != TagKind::kDelta && *tag != TagKind::kPartial))
    throw Failure{kExitInput, "invalid standard '" + value + "'"};
  return *tag;
}

// Parses and validates; standards flags override the file.
GameSetup Load(const std::string& path, const Globals& g) {
  const std::string text = ReadFile(path);
  auto parsed = ParseTheory(text);
  if (!parsed) {
    std::string msg;
    for (const auto& e : parsed.errors)
      msg += (msg.empty() ? "" : "\n") + path + ":" + e.ToString();
    throw Failure{kExitInput, msg};
  }
  GameSetup setup = std::move(*parsed.value);
  if (!g.evidential_standard.empty())
    setup.evidential_standard = StandardFlag(g.evidential_standard, false);
  if (!g.deontic_standard.empty())
    setup.deontic_standard = StandardFlag(g.deontic_standard, true);
  const ValidationReport v = ValidateSetup(setup);
  if (!v.ok()) {
    std::string msg;
    for (const auto& e : v.errors)
      msg += (msg.empty() ? "" : "\n") + path + ": " + e;
    throw Failure{kExitInput, msg};
  }
  return setup;
}

Literal LiteralArg(const std::string& text) {
  try {
    return Literal::Parse(text);
  } catch (const std::exception&) {
    throw Failure{kExitInput, "invalid literal '" + text + "'"};
  }
}

std::string GlyphKey(const ConclusionKey& k, Status s) {
  const Sign sign = s == Status::kRefuted ? Sign::kMinus : Sign::kPlus;
  return TaggedLiteral{sign, k.tag, k.mode, k.literal}.ToGlyphString();
}

std::string JoinIds(const std::set<RuleId>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
  return out;
}

int Check(const std::string& path, const Globals& g) {
  const std::string text = ReadFile(path);
  auto parsed = ParseTheory(text);
  if (!parsed) {
    if (g.json) {
      Json j;
      j["ok"] = false;
      Json errs = Json::array();
      for (const auto& e : parsed.errors) errs.push_back(ToJson(e));
      j["parse_errors"] = std::move(errs);
      std::cout << Dump(j);
    }
    for (const auto& e : parsed.errors)
      std::cerr << path << ":" << e.ToString() << "\n";
    return kExitInput;
  }
  const ValidationReport v = ValidateSetup(*parsed.value);
  if (g.json) {
    std::cout << Dump(ToJson(v));
  } else {
    for (const auto& e : v.errors) std::cout << "error: " << e << "\n";
    for (const auto& w : v.warnings) std::cout << "warning: " << w << "\n";
    if (v.ok()) std::cout << "ok\n";
  }
  return v.ok() ? kExitOk : kExitInput;
}

int Prove(const std::string& path, const std::string& query, bool all,
          const Globals& g) {
  const GameSetup setup = Load(path, g);
  if (!all && query.empty())
    throw Failure{kExitInput, "prove: one of --query or --all is required"};
  const ConclusionSet cs = ComputeConclusions(setup.UnionTheory());
  if (all) {
    if (g.json) {
      std::cout << Dump(ToJson(cs));
    } else {
      for (const auto& [key, status] : cs.entries()) {
        if (status == Status::kUndetermined)
          std::cout << "?" << TagGlyph(key.tag)
                    << (key.mode == Mode::kObligation ? "_O " : " ")
                    << key.literal.ToString() << "\n";
        else
          std::cout << GlyphKey(key, status) << "\n";
      }
    }
    return kExitOk;
  }
  auto q = ParseQuery(query);
  if (!q) throw Failure{kExitInput, "query: " + q.errors.front().ToString()};
  const Status s = cs.Query(*q.value);
  if (g.json) {
    Json j;
    j["query"] = q.value->ToString();
    j["literal"] = q.value->literal.ToString();
    j["mode"] = ModeCode(q.value->mode);
    j["tag"] = TagName(q.value->tag);
    j["sign"] = q.value->sign == Sign::kPlus ? "+" : "-";
    j["status"] = StatusName(s);
    std::cout << Dump(j);
  } else {
    std::cout << q.value->ToGlyphString() << ": " << StatusName(s) << "\n";
  }
  return kExitOk;
}

int Standards(const std::string& path, const std::string& literal,
              const std::string& mode, const Globals& g) {
  const GameSetup setup = Load(path, g);
  const Literal l = LiteralArg(literal);
  const Mode m = mode == "O" ? Mode::kObligation : Mode::kEvidential;
  const StandardsReport r = StandardsMet(setup.UnionTheory(), l, m);
  if (g.json) {
    std::cout << Dump(ToJson(r));
    return kExitOk;
  }
  for (ProofStandard s :
       {ProofStandard::kScintilla, ProofStandard::kSubstantial,
        ProofStandard::kPreponderance, ProofStandard::kBeyondReasonableDoubt,
        ProofStandard::kDialecticalValidity})
    std::cout << ProofStandardName(s) << ": "
              << (r.Meets(s) ? "met" : "not met") << "\n";
  return kExitOk;
}

int PermissionCmd(const std::string& path, const std::string& literal,
                  const std::string& tag, const Globals& g) {
  const GameSetup setup = Load(path, g);
  const Literal l = LiteralArg(literal);
  const TagKind t = tag == "d" ? TagKind::kDelta : TagKind::kPartial;
  const PermissionStatus p = WeaklyPermitted(setup.UnionTheory(), l, t);
  if (g.json)
    std::cout << Dump(ToJson(p));
  else
    std::cout << l.ToString() << ": " << PermissionName(p.status) << " ("
              << p.witness.ToGlyphString() << ")\n";
  return kExitOk;
}

void PrintTrace(const GameTrace& trace, const Globals& g) {
  if (g.json) {
    std::cout << Dump(ToJson(trace));
    return;
  }
  for (std::size_t i = 0; i < trace.turns.size(); ++i) {
    const auto& t = trace.turns[i];
    std::cout << "turn " << i << " " << PlayerName(t.move.player) << ": ";
    if (t.move.is_pass()) {
      std::cout << "pass\n";
    } else {
      std::cout << JoinIds(t.move.rules);
      std::string targets;
      for (const auto& m : t.move.targets)
        targets += (targets.empty() ? "" : ", ") + m.ToString();
      std::cout << " targets " << targets << "\n";
    }
    if (!t.newly_proved.empty()) {
      std::cout << "  new:";
      for (const auto& c : t.newly_proved) std::cout << " " << c.ToGlyphString();
      std::cout << "\n";
    }
  }
  std::cout << "outcome: " << OutcomeName(trace.outcome) << "\n";
}

int GameRun(const std::string& path, const std::string& moves_path,
            const Globals& g) {
  const GameSetup setup = Load(path, g);
  const MovesParse mp = ParseMoves(ReadFile(moves_path));
  if (!mp.errors.empty()) {
    std::string msg;
    for (const auto& e : mp.errors)
      msg += (msg.empty() ? "" : "\n") + moves_path + ":" + e;
    throw Failure{kExitInput, msg};
  }
  try {
    PrintTrace(Replay(setup, mp.moves), g);
  } catch (const IllegalMove& e) {
    throw Failure{kExitIllegalMove, moves_path + ": " + e.what()};
  }
  return kExitOk;
}

int GameAuto(const std::string& path, const std::string& policy,
             const Globals& g) {
  const GameSetup setup = Load(path, g);
  PrintTrace(AutoPlay(setup, policy == "full" ? Policy::kFullDisclosure
                                              : Policy::kGreedyMinimal),
             g);
  return kExitOk;
}

int GameAnalyze(const std::string& path, int bound, const Globals& g) {
  const GameSetup setup = Load(path, g);
  Analysis a;
  try {
    a = Analyze(setup, bound);
  } catch (const BoundExceeded& e) {
    throw Failure{kExitBound, e.what()};
  }
  if (g.json) {
    std::cout << Dump(ToJson(a));
  } else {
    std::cout << "winner: " << WinnerName(a.winner) << "\n"
              << "minimal opening: "
              << (a.minimal_opening ? "{" + JoinIds(*a.minimal_opening) + "}"
                                    : std::string("none"))
              << "\n"
              << "states explored: " << a.states_explored << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defeasible deontic logic and trial dialogue games"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--evidential-standard", g.evidential_standard,
                 "Evidential proof tag for the game")
      ->check(CLI::IsMember({"d", "p", "s", "w"}));
  app.add_option("--deontic-standard", g.deontic_standard,
                 "Deontic proof tag for the game")
      ->check(CLI::IsMember({"d", "p"}));

  std::string file, query, literal, mode = "E", tag, moves, policy;
  bool all = false;
  int bound = kDefaultSearchBound;

  auto* check = app.add_subcommand("check", "Validate a theory file");
  check->add_option("FILE", file)->required();

  auto* prove = app.add_subcommand("prove", "Query conclusions");
  prove->add_option("FILE", file)->required();
  auto* q_opt = prove->add_option("--query", query, "Tagged literal, e.g. \"+d b\"");
  auto* all_opt = prove->add_flag("--all", all, "Every conclusion");
  q_opt->excludes(all_opt);

  auto* standards = app.add_subcommand("standards", "Proof standards met");
  standards->add_option("FILE", file)->required();
  standards->add_option("--literal", literal)->required();
  standards->add_option("--mode", mode)->check(CLI::IsMember({"E", "O"}));

  auto* permission = app.add_subcommand("permission", "Weak permission");
  permission->add_option("FILE", file)->required();
  permission->add_option("--literal", literal)->required();
  permission->add_option("--tag", tag)->required()->check(
      CLI::IsMember({"d", "p"}));

  auto* game = app.add_subcommand("game", "Dialogue game");
  game->require_subcommand(1);
  auto* run = game->add_subcommand("run", "Replay a moves file");
  run->add_option("FILE", file)->required();
  run->add_option("--moves", moves)->required();
  auto* autoplay = game->add_subcommand("auto", "Scripted playout");
  autoplay->add_option("FILE", file)->required();
  autoplay->add_option("--policy", policy)->required()->check(
      CLI::IsMember({"greedy", "full"}));
  auto* analyze = game->add_subcommand("analyze", "Optimal-play analysis");
  analyze->add_option("FILE", file)->required();
  analyze->add_option("--bound", bound)->check(CLI::NonNegativeNumber);

  for (auto* sub : {check, prove, standards, permission, game, run, autoplay,
                    analyze})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (check->parsed()) return Check(file, g);
    if (prove->parsed()) return Prove(file, query, all, g);
    if (standards->parsed()) return Standards(file, literal, mode, g);
    if (permission->parsed()) return PermissionCmd(file, literal, tag, g);
    if (run->parsed()) return GameRun(file, moves, g);
    if (autoplay->parsed()) return GameAuto(file, policy, g);
    if (analyze->parsed()) return GameAnalyze(file, bound, g);
  } catch (const Failure& f) {
    std::cerr << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

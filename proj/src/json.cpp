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

#include "ddl/json.hpp"

namespace ddl {
namespace {

Json Ids(const std::set<RuleId>& ids) {
  Json a = Json::array();
  for (const auto& id : ids) a.push_back(id);
  return a;
}

Json Strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

Json Rules(const std::vector<Rule>& rules) {
  Json a = Json::array();
  for (const auto& r : rules) a.push_back(ToJson(r));
  return a;
}

}  // namespace

Json ToJson(const ConclusionKey& key, Status status) {
  Json j;
  j["literal"] = key.literal.ToString();
  j["mode"] = ModeCode(key.mode);
  j["tag"] = TagName(key.tag);
  j["status"] = StatusName(status);
  return j;
}

Json ToJson(const TaggedLiteral& c) {
  return ToJson(ConclusionKey{c.tag, c.mode, c.literal},
                c.sign == Sign::kPlus ? Status::kProved : Status::kRefuted);
}

Json ToJson(const ConclusionSet& cs) {
  Json a = Json::array();
  for (const auto& [key, status] : cs.entries()) a.push_back(ToJson(key, status));
  return a;
}

Json ToJson(const ModalLiteral& l) {
  return Json::array({ModeCode(l.mode), l.literal.ToString()});
}

Json ToJson(const Rule& rule) {
  Json j;
  j["id"] = rule.id;
  Json body = Json::array();
  for (const auto& a : rule.antecedents) {
    Json ant;
    ant["mode"] = ModeCode(a.mode);
    ant["literal"] = a.literal.ToString();
    if (a.annotation) {
      ant["sign"] = a.annotation->sign == Sign::kPlus ? "+" : "-";
      ant["tag"] = TagName(a.annotation->tag);
    }
    body.push_back(std::move(ant));
  }
  j["antecedents"] = std::move(body);
  j["mode"] = ModeCode(rule.head_mode);
  j["head"] = rule.head.ToString();
  return j;
}

Json ToJson(const GameSetup& s) {
  Json j;
  Json facts = Json::array();
  for (const auto& f : s.common_facts) facts.push_back(ToJson(f));
  j["facts"] = std::move(facts);
  j["common_rules"] = Rules(s.common_rules);
  j["pr_private"] = Rules(s.pr_private);
  j["def_private"] = Rules(s.def_private);
  Json sup = Json::array();
  for (const auto& [hi, lo] : s.superiority) sup.push_back(Json::array({hi, lo}));
  j["superiority"] = std::move(sup);
  Json claim = Json::array();
  for (const auto& a : s.claim.evidential) claim.push_back(a.ToString());
  j["claim"] = std::move(claim);
  j["evidential_standard"] = TagName(s.evidential_standard);
  j["deontic_standard"] = TagName(s.deontic_standard);
  return j;
}

Json ToJson(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["errors"] = Strings(r.errors);
  j["warnings"] = Strings(r.warnings);
  j["superiority_cycle"] = r.superiority_cycle;
  j["deontically_consistent"] = r.deontically_consistent();
  return j;
}

Json ToJson(const ParseError& e) {
  Json j;
  j["line"] = e.span.line;
  j["column"] = e.span.column;
  j["length"] = e.span.length;
  j["message"] = e.message;
  j["expected"] = Strings(e.expected);
  return j;
}

Json ToJson(const StandardsReport& r) {
  Json j;
  j["literal"] = r.literal.ToString();
  j["mode"] = ModeCode(r.mode);
  Json met = Json::array();
  for (ProofStandard s : r.met) met.push_back(ProofStandardName(s));
  j["met"] = std::move(met);
  return j;
}

Json ToJson(const PermissionStatus& p) {
  Json j;
  j["literal"] = p.literal.ToString();
  j["tag"] = TagName(p.tag);
  j["status"] = PermissionName(p.status);
  return j;
}

Json ToJson(const LegalityReport& r) {
  Json j;
  j["legal"] = r.legal;
  j["violations"] = Strings(r.violations);
  Json targets = Json::array();
  for (const auto& t : r.targets) {
    Json tj;
    tj["target"] = ToJson(t.target);
    tj["determined_before"] = t.determined_before;
    tj["satisfied"] = Strings(t.satisfied);
    targets.push_back(std::move(tj));
  }
  j["targets"] = std::move(targets);
  return j;
}

Json ToJson(const GameTrace& trace) {
  Json j;
  Json turns = Json::array();
  for (const auto& t : trace.turns) {
    Json tj;
    tj["player"] = PlayerName(t.move.player);
    tj["rules"] = Ids(t.move.rules);
    Json targets = Json::array();
    for (const auto& m : t.move.targets) targets.push_back(ToJson(m));
    tj["targets"] = std::move(targets);
    Json fresh = Json::array();
    for (const auto& c : t.newly_proved) fresh.push_back(ToJson(c));
    tj["newly_proved"] = std::move(fresh);
    turns.push_back(std::move(tj));
  }
  j["turns"] = std::move(turns);
  j["outcome"] = OutcomeName(trace.outcome);
  return j;
}

std::string_view WinnerName(Outcome o) {
  switch (o) {
    case Outcome::kPrSucceeds: return "pr";
    case Outcome::kDefSucceeds: return "def";
    case Outcome::kStalled: return "stalled";
    case Outcome::kOngoing: return "ongoing";
  }
  return "?";
}

Json ToJson(const Analysis& a) {
  Json j;
  j["winner"] = WinnerName(a.winner);
  j["minimal_opening"] =
      a.minimal_opening ? Ids(*a.minimal_opening) : Json(nullptr);
  j["states_explored"] = a.states_explored;
  return j;
}

Json ToJson(const DiscrepancyReport& r) {
  Json j;
  j["clean"] = r.clean();
  j["superiority_free"] = r.superiority_free;
  j["literals_checked"] = r.literals_checked;
  j["arguments"] = r.arguments;
  Json m = Json::array();
  for (const auto& d : r.mismatches) {
    Json dj;
    dj["literal"] = ToJson(d.literal);
    dj["engine_delta"] = StatusName(d.engine_delta);
    dj["justified"] = d.justified;
    m.push_back(std::move(dj));
  }
  j["mismatches"] = std::move(m);
  return j;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ddl

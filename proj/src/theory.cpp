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

#include "ddl/theory.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ddl {

bool IsIdentifier(std::string_view text) {
  if (text.empty() || !std::islower(static_cast<unsigned char>(text[0])))
    return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Literal::Literal(std::string a, bool pos) : atom(std::move(a)), positive(pos) {
  if (!IsIdentifier(atom))
    throw std::invalid_argument("invalid atom '" + atom + "'");
}

Literal Literal::Parse(std::string_view text) {
  bool pos = true;
  if (!text.empty() && text.front() == '~') {
    pos = false;
    text.remove_prefix(1);
  }
  return Literal(std::string(text), pos);
}

std::string Literal::ToString() const {
  return positive ? atom : "~" + atom;
}

Literal Complement(const Literal& l) {
  Literal out = l;
  out.positive = !l.positive;
  return out;
}

std::string_view ModeCode(Mode m) {
  return m == Mode::kEvidential ? "E" : "O";
}

char TagCode(TagKind t) {
  switch (t) {
    case TagKind::kDelta: return 'd';
    case TagKind::kPartial: return 'p';
    case TagKind::kSigma: return 's';
    case TagKind::kSigmaMinus: return 'w';
  }
  return '?';
}

std::string_view TagName(TagKind t) {
  switch (t) {
    case TagKind::kDelta: return "delta";
    case TagKind::kPartial: return "partial";
    case TagKind::kSigma: return "sigma";
    case TagKind::kSigmaMinus: return "sigma_minus";
  }
  return "?";
}

std::string_view TagGlyph(TagKind t) {
  switch (t) {
    case TagKind::kDelta: return "δ";
    case TagKind::kPartial: return "∂";
    case TagKind::kSigma: return "σ";
    case TagKind::kSigmaMinus: return "σ⁻";
  }
  return "?";
}

std::optional<TagKind> TagFromCode(char c) {
  switch (c) {
    case 'd': return TagKind::kDelta;
    case 'p': return TagKind::kPartial;
    case 's': return TagKind::kSigma;
    case 'w': return TagKind::kSigmaMinus;
    default: return std::nullopt;
  }
}

std::string ModalLiteral::ToString() const {
  return mode == Mode::kObligation ? "O " + literal.ToString()
                                   : literal.ToString();
}

std::string TaggedLiteral::ToString() const {
  std::string out;
  out += sign == Sign::kPlus ? '+' : '-';
  out += TagCode(tag);
  out += ' ';
  out += ModalLiteral{mode, literal}.ToString();
  return out;
}

std::string TaggedLiteral::ToGlyphString() const {
  std::string out = sign == Sign::kPlus ? "+" : "-";
  out += TagGlyph(tag);
  if (mode == Mode::kObligation) out += "_O";
  out += ' ';
  out += literal.ToString();
  return out;
}

std::string Antecedent::ToString() const {
  std::string out;
  if (annotation) {
    out += annotation->sign == Sign::kPlus ? '+' : '-';
    out += TagCode(annotation->tag);
    out += ' ';
  }
  out += ModalLiteral{mode, literal}.ToString();
  return out;
}

std::string Rule::ToString() const {
  std::string out = id + ":";
  for (std::size_t i = 0; i < antecedents.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += antecedents[i].ToString();
  }
  out += head_mode == Mode::kObligation ? " =>O " : " => ";
  out += head.ToString();
  return out;
}

const Rule* DefeasibleTheory::FindRule(std::string_view id) const {
  auto it = std::find_if(rules.begin(), rules.end(),
                         [&](const Rule& r) { return r.id == id; });
  return it == rules.end() ? nullptr : &*it;
}

bool DefeasibleTheory::HasAnnotations() const {
  for (const auto& r : rules)
    for (const auto& a : r.antecedents)
      if (a.annotation) return true;
  return false;
}

DefeasibleTheory WithoutSuperiority(DefeasibleTheory theory) {
  theory.superiority.clear();
  return theory;
}

std::vector<ModalLiteral> Claim::Deontic() const {
  std::vector<ModalLiteral> out;
  out.reserve(evidential.size());
  for (const auto& a : evidential)
    out.push_back({Mode::kObligation, Complement(a)});
  return out;
}

bool Claim::Contains(const Literal& l) const {
  return std::find(evidential.begin(), evidential.end(), l) !=
         evidential.end();
}

std::string_view PlayerName(Player p) {
  return p == Player::kPr ? "pr" : "def";
}

DefeasibleTheory GameSetup::UnionTheory() const {
  DefeasibleTheory t;
  t.facts = common_facts;
  for (const auto* pool : {&common_rules, &pr_private, &def_private})
    t.rules.insert(t.rules.end(), pool->begin(), pool->end());
  t.superiority = superiority;
  return t;
}

namespace {

bool HasCycle(const std::set<SuperiorityPair>& sup) {
  std::map<RuleId, std::vector<RuleId>> succ;
  for (const auto& [s, w] : sup) succ[s].push_back(w);
  // 0 = unvisited, 1 = on stack, 2 = done.
  std::map<RuleId, int> color;
  std::vector<std::pair<RuleId, std::size_t>> stack;
  for (const auto& [start, unused] : succ) {
    if (color[start] != 0) continue;
    stack.push_back({start, 0});
    color[start] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& out = succ[node];
      if (next == out.size()) {
        color[node] = 2;
        stack.pop_back();
        continue;
      }
      const RuleId child = out[next++];
      if (color[child] == 1) return true;
      if (color[child] == 0) {
        color[child] = 1;
        stack.push_back({child, 0});
      }
    }
  }
  return false;
}

}  // namespace

ValidationReport ValidateTheory(const DefeasibleTheory& theory) {
  ValidationReport report;
  std::map<RuleId, const Rule*> by_id;
  for (const auto& r : theory.rules) {
    if (!by_id.emplace(r.id, &r).second)
      report.errors.push_back("duplicate rule id '" + r.id + "'");
  }
  for (const auto& [s, w] : theory.superiority) {
    bool dangling = false;
    for (const auto& id : {s, w}) {
      if (!by_id.count(id)) {
        report.errors.push_back("superiority references unknown rule '" + id +
                                "'");
        dangling = true;
      }
    }
    if (!dangling && by_id[s]->head_mode != by_id[w]->head_mode) {
      report.warnings.push_back("superiority " + s + " > " + w +
                                " crosses modes and is ignored");
    }
  }
  if (HasCycle(theory.superiority)) {
    report.superiority_cycle = true;
    report.warnings.push_back("superiority cycle");
  }
  for (const auto& f : theory.facts) {
    if (f.mode == Mode::kObligation && f.literal.positive &&
        theory.facts.count({Mode::kObligation, Complement(f.literal)})) {
      report.conflicting_modal_facts = true;
      report.warnings.push_back("conflicting modal facts O " +
                                f.literal.ToString() + " and O " +
                                Complement(f.literal).ToString());
    }
  }
  return report;
}

ValidationReport ValidateSetup(const GameSetup& setup) {
  ValidationReport report = ValidateTheory(setup.UnionTheory());
  std::map<RuleId, std::string_view> owner;
  const std::pair<const std::vector<Rule>*, std::string_view> pools[] = {
      {&setup.common_rules, "common"},
      {&setup.pr_private, "pr"},
      {&setup.def_private, "def"}};
  for (const auto& [pool, name] : pools) {
    for (const auto& r : *pool) {
      auto [it, fresh] = owner.emplace(r.id, name);
      if (!fresh && it->second != name) {
        report.errors.push_back("rule '" + r.id + "' is in both " +
                                std::string(it->second) + " and " +
                                std::string(name));
      }
    }
  }
  return report;
}

std::set<SuperiorityPair> RestrictSuperiority(
    const std::set<SuperiorityPair>& sup, const std::set<RuleId>& ids) {
  std::set<SuperiorityPair> out;
  for (const auto& p : sup)
    if (ids.count(p.first) && ids.count(p.second)) out.insert(p);
  return out;
}

DefeasibleTheory PlayerView(const GameSetup& setup, Player player) {
  DefeasibleTheory view;
  view.facts = setup.common_facts;
  view.rules = setup.common_rules;
  const auto& own = setup.PrivateRules(player);
  view.rules.insert(view.rules.end(), own.begin(), own.end());
  std::set<RuleId> ids;
  for (const auto& r : view.rules) ids.insert(r.id);
  view.superiority = RestrictSuperiority(setup.superiority, ids);
  return view;
}

}  // namespace ddl

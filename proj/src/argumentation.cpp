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

#include <algorithm>
#include <map>

namespace ddl {

std::vector<Argument> BuildArguments(const DefeasibleTheory& theory,
                                     std::size_t limit) {
  if (theory.HasAnnotations())
    throw std::invalid_argument(
        "argument construction does not support annotated antecedents");
  std::vector<Argument> args;
  std::map<ModalLiteral, std::vector<ArgumentId>> by_conclusion;
  std::map<ModalLiteral, ArgumentId> fact_arg;
  std::set<std::pair<RuleId, std::vector<ArgumentId>>> seen;

  for (const auto& f : theory.facts) {
    fact_arg[f] = args.size();
    by_conclusion[f].push_back(args.size());
    args.push_back({f, std::nullopt, {}, {}});
  }

  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& rule : theory.rules) {
      // Candidate subarguments per antecedent, snapshotted for this pass.
      std::vector<std::vector<ArgumentId>> choices;
      bool possible = true;
      for (const auto& a : rule.antecedents) {
        const ModalLiteral need{a.mode, a.literal};
        if (auto f = fact_arg.find(need); f != fact_arg.end()) {
          choices.push_back({f->second});
          continue;
        }
        std::vector<ArgumentId> usable;
        if (auto it = by_conclusion.find(need); it != by_conclusion.end())
          for (ArgumentId id : it->second)
            if (!args[id].rules.count(rule.id)) usable.push_back(id);
        if (usable.empty()) {
          possible = false;
          break;
        }
        choices.push_back(std::move(usable));
      }
      if (!possible) continue;

      std::vector<std::size_t> pick(choices.size(), 0);
      while (true) {
        std::vector<ArgumentId> subs(choices.size());
        for (std::size_t i = 0; i < choices.size(); ++i)
          subs[i] = choices[i][pick[i]];
        if (seen.emplace(rule.id, subs).second) {
          Argument arg{{rule.head_mode, rule.head}, rule.id, subs, {rule.id}};
          for (ArgumentId s : subs)
            arg.rules.insert(args[s].rules.begin(), args[s].rules.end());
          by_conclusion[arg.conclusion].push_back(args.size());
          args.push_back(std::move(arg));
          grew = true;
          if (args.size() > limit)
            throw ArgumentLimitExceeded("more than " + std::to_string(limit) +
                                        " arguments");
        }
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
      }
    }
  }
  return args;
}

AttackGraph BuildAttackGraph(const DefeasibleTheory& theory,
                             std::vector<Argument> arguments) {
  AttackGraph g;
  g.arguments = std::move(arguments);
  const auto& args = g.arguments;
  std::map<ModalLiteral, std::vector<ArgumentId>> by_conclusion;
  for (ArgumentId i = 0; i < args.size(); ++i)
    by_conclusion[args[i].conclusion].push_back(i);

  // Rule-based nodes of each tree. Subarguments always precede their
  // parents, so one forward pass suffices.
  std::vector<std::vector<ArgumentId>> nodes(args.size());
  for (ArgumentId i = 0; i < args.size(); ++i) {
    if (args[i].is_fact()) continue;
    std::set<ArgumentId> acc{i};
    for (ArgumentId s : args[i].subarguments)
      acc.insert(nodes[s].begin(), nodes[s].end());
    nodes[i].assign(acc.begin(), acc.end());
  }

  for (ArgumentId b = 0; b < args.size(); ++b) {
    for (ArgumentId node : nodes[b]) {
      const ModalLiteral target{args[node].conclusion.mode,
                                Complement(args[node].conclusion.literal)};
      auto it = by_conclusion.find(target);
      if (it == by_conclusion.end()) continue;
      for (ArgumentId a : it->second) {
        const bool inferior =
            args[a].top_rule &&
            theory.superiority.count({*args[node].top_rule, *args[a].top_rule});
        if (!inferior) g.attacks.insert({a, b});
      }
    }
  }
  return g;
}

std::set<ArgumentId> GroundedExtension(const AttackGraph& graph, int* rounds) {
  const std::size_t n = graph.arguments.size();
  std::vector<std::vector<ArgumentId>> attackers(n);
  for (const auto& [a, b] : graph.attacks) attackers[b].push_back(a);

  std::vector<bool> accepted(n, false), defeated(n, false);
  std::set<ArgumentId> ext;
  int iterations = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++iterations;
    std::vector<ArgumentId> fresh;
    for (ArgumentId i = 0; i < n; ++i) {
      if (accepted[i]) continue;
      const bool defended =
          std::all_of(attackers[i].begin(), attackers[i].end(),
                      [&](ArgumentId a) { return defeated[a]; });
      if (defended) fresh.push_back(i);
    }
    for (ArgumentId i : fresh) {
      accepted[i] = true;
      ext.insert(i);
      changed = true;
    }
    for (const auto& [a, b] : graph.attacks)
      if (accepted[a]) defeated[b] = true;
  }
  if (rounds) *rounds = iterations;
  return ext;
}

std::set<ModalLiteral> JustifiedConclusions(const AttackGraph& graph,
                                            const std::set<ArgumentId>& ext) {
  std::set<ModalLiteral> out;
  for (ArgumentId i : ext) out.insert(graph.arguments[i].conclusion);
  return out;
}

DiscrepancyReport DeltaEquivalenceCheck(const DefeasibleTheory& theory) {
  DiscrepancyReport report;
  report.superiority_free = theory.superiority.empty();
  const ConclusionSet cs = ComputeConclusions(theory);
  AttackGraph graph = BuildAttackGraph(theory, BuildArguments(theory));
  report.arguments = graph.arguments.size();
  const auto justified = JustifiedConclusions(graph, GroundedExtension(graph));
  for (const Literal& l : cs.literals()) {
    for (Mode m : kAllModes) {
      ++report.literals_checked;
      const Status s = cs.status(TagKind::kDelta, m, l);
      const bool just = justified.count({m, l}) > 0;
      const bool agrees = just ? s == Status::kProved : s == Status::kRefuted;
      if (!agrees) report.mismatches.push_back({{m, l}, s, just});
    }
  }
  return report;
}

}  // namespace ddl

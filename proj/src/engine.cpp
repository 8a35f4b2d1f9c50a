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

#include "ddl/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ddl {

std::string_view StatusName(Status s) {
  switch (s) {
    case Status::kProved: return "proved";
    case Status::kRefuted: return "refuted";
    case Status::kUndetermined: return "undetermined";
  }
  return "?";
}

namespace {

constexpr int kNumTags = 4;
constexpr int kNumModes = 2;

int TagIndex(TagKind t) { return static_cast<int>(t); }
int ModeIndex(Mode m) { return static_cast<int>(m); }

// +1 satisfied, -1 failed, 0 not yet known.
using Tri = int8_t;

struct CompiledAntecedent {
  int mode;
  int lit;
  bool annotated;
  int ann_tag;
  bool ann_positive;
};

struct CompiledRule {
  int mode;
  int head;
  std::vector<CompiledAntecedent> body;
};

// Dense encoding: literal index = 2 * atom + (negative ? 1 : 0), so the
// complement is index ^ 1.
class Evaluator {
 public:
  explicit Evaluator(const DefeasibleTheory& theory) {
    for (const auto& f : theory.facts) Intern(f.literal);
    for (const auto& r : theory.rules) {
      Intern(r.head);
      for (const auto& a : r.antecedents) Intern(a.literal);
    }
    const int n = static_cast<int>(literals_.size());
    facts_.assign(kNumModes * n, false);
    for (const auto& f : theory.facts)
      facts_[ModeIndex(f.mode) * n + index_.at(f.literal)] = true;

    std::map<RuleId, int> rule_index;
    rules_for_.assign(kNumModes * n, {});
    for (const auto& r : theory.rules) {
      CompiledRule cr{ModeIndex(r.head_mode), index_.at(r.head), {}};
      for (const auto& a : r.antecedents) {
        CompiledAntecedent ca{ModeIndex(a.mode), index_.at(a.literal), false,
                              0, true};
        if (a.annotation) {
          ca.annotated = true;
          ca.ann_tag = TagIndex(a.annotation->tag);
          ca.ann_positive = a.annotation->sign == Sign::kPlus;
        }
        cr.body.push_back(ca);
      }
      const int idx = static_cast<int>(rules_.size());
      rule_index[r.id] = idx;
      rules_for_[cr.mode * n + cr.head].push_back(idx);
      rules_.push_back(std::move(cr));
    }
    stronger_.assign(rules_.size(), std::vector<bool>(rules_.size(), false));
    for (const auto& [s, w] : theory.superiority) {
      const int si = rule_index.at(s), wi = rule_index.at(w);
      const auto& rs = rules_[si];
      const auto& rw = rules_[wi];
      // Only same-mode conflicts are ever consulted.
      if (rs.mode == rw.mode && rs.head == (rw.head ^ 1))
        stronger_[si][wi] = true;
    }
    status_.assign(kNumTags * kNumModes * n, 0);
  }

  int Run() {
    const int n = static_cast<int>(literals_.size());
    int sweeps = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      ++sweeps;
      for (int t = 0; t < kNumTags; ++t) {
        for (int m = 0; m < kNumModes; ++m) {
          for (int l = 0; l < n; ++l) {
            Tri& slot = status_[Key(t, m, l)];
            if (slot != 0) continue;
            const bool plus = Plus(t, m, l);
            const bool minus = Minus(t, m, l);
            if (plus && minus)
              throw std::logic_error("incoherent conclusion for " +
                                     literals_[l].ToString());
            if (plus || minus) {
              slot = plus ? 1 : -1;
              changed = true;
            }
          }
        }
      }
    }
    return sweeps;
  }

  void Export(std::map<ConclusionKey, Status>& out,
              std::vector<Literal>& literals) const {
    const int n = static_cast<int>(literals_.size());
    for (int t = 0; t < kNumTags; ++t)
      for (int m = 0; m < kNumModes; ++m)
        for (int l = 0; l < n; ++l) {
          const Tri v = status_[Key(t, m, l)];
          out.emplace(ConclusionKey{static_cast<TagKind>(t),
                                    static_cast<Mode>(m), literals_[l]},
                      v > 0   ? Status::kProved
                      : v < 0 ? Status::kRefuted
                              : Status::kUndetermined);
        }
    literals = literals_;
    std::sort(literals.begin(), literals.end());
  }

 private:
  void Intern(const Literal& l) {
    for (const Literal& v : {l, Complement(l)}) {
      if (index_.count(v)) continue;
      // Keep the pair adjacent so that complement is xor 1.
      Literal pos(v.atom, true);
      index_[pos] = static_cast<int>(literals_.size());
      literals_.push_back(pos);
      Literal neg(v.atom, false);
      index_[neg] = static_cast<int>(literals_.size());
      literals_.push_back(neg);
    }
  }

  std::size_t Key(int t, int m, int l) const {
    return (static_cast<std::size_t>(t) * kNumModes + m) * literals_.size() +
           l;
  }
  bool Fact(int m, int l) const { return facts_[m * literals_.size() + l]; }
  const std::vector<int>& RulesFor(int m, int l) const {
    return rules_for_[m * literals_.size() + l];
  }

  Tri Antecedent(const CompiledAntecedent& a, int tag) const {
    if (a.annotated) {
      const Tri v = status_[Key(a.ann_tag, a.mode, a.lit)];
      return a.ann_positive ? v : static_cast<Tri>(-v);
    }
    return status_[Key(tag, a.mode, a.lit)];
  }
  bool Applicable(int r, int tag) const {
    for (const auto& a : rules_[r].body)
      if (Antecedent(a, tag) != 1) return false;
    return true;
  }
  bool Discarded(int r, int tag) const {
    for (const auto& a : rules_[r].body)
      if (Antecedent(a, tag) == -1) return true;
    return false;
  }

  static constexpr int kDelta = 0, kPartial = 1, kSigma = 2, kSigmaMinus = 3;

  // Tag whose failure discards an attacker in the skeptical variants.
  static int AttackerTag(int t) { return t == kDelta ? kSigma : kPartial; }

  bool Plus(int t, int m, int l) const {
    if (Fact(m, l)) return true;
    const auto& support = RulesFor(m, l);
    const auto& attack = RulesFor(m, l ^ 1);
    switch (t) {
      case kDelta:
      case kPartial: {
        if (Fact(m, l ^ 1)) return false;
        if (std::none_of(support.begin(), support.end(),
                         [&](int r) { return Applicable(r, t); }))
          return false;
        const int at = AttackerTag(t);
        return std::all_of(attack.begin(), attack.end(), [&](int s) {
          if (Discarded(s, at)) return true;
          return std::any_of(support.begin(), support.end(), [&](int u) {
            return stronger_[u][s] && Applicable(u, t);
          });
        });
      }
      case kSigma:
        return std::any_of(support.begin(), support.end(), [&](int r) {
          if (!Applicable(r, kSigma)) return false;
          return std::all_of(attack.begin(), attack.end(), [&](int s) {
            return !stronger_[s][r] || Discarded(s, kDelta);
          });
        });
      case kSigmaMinus:
        return std::any_of(support.begin(), support.end(),
                           [&](int r) { return Applicable(r, kSigmaMinus); });
    }
    return false;
  }

  // Strong negation of Plus.
  bool Minus(int t, int m, int l) const {
    if (Fact(m, l)) return false;
    const auto& support = RulesFor(m, l);
    const auto& attack = RulesFor(m, l ^ 1);
    const auto all_discarded = [&](int tag) {
      return std::all_of(support.begin(), support.end(),
                         [&](int r) { return Discarded(r, tag); });
    };
    switch (t) {
      case kDelta:
      case kPartial: {
        if (Fact(m, l ^ 1) || all_discarded(t)) return true;
        const int at = AttackerTag(t);
        return std::any_of(attack.begin(), attack.end(), [&](int s) {
          if (!Applicable(s, at)) return false;
          return std::all_of(support.begin(), support.end(), [&](int u) {
            return !stronger_[u][s] || Discarded(u, t);
          });
        });
      }
      case kSigma:
        return std::all_of(support.begin(), support.end(), [&](int r) {
          if (Discarded(r, kSigma)) return true;
          return std::any_of(attack.begin(), attack.end(), [&](int s) {
            return stronger_[s][r] && Applicable(s, kDelta);
          });
        });
      case kSigmaMinus:
        return all_discarded(kSigmaMinus);
    }
    return false;
  }

  std::map<Literal, int> index_;
  std::vector<Literal> literals_;
  std::vector<bool> facts_;
  std::vector<CompiledRule> rules_;
  std::vector<std::vector<int>> rules_for_;
  std::vector<std::vector<bool>> stronger_;
  std::vector<Tri> status_;
};

}  // namespace

Status ConclusionSet::status(TagKind tag, Mode mode, const Literal& l) const {
  auto it = entries_.find(ConclusionKey{tag, mode, l});
  return it == entries_.end() ? Status::kRefuted : it->second;
}

Status ConclusionSet::Query(const TaggedLiteral& q) const {
  const Status s = status(q.tag, q.mode, q.literal);
  if (q.sign == Sign::kPlus || s == Status::kUndetermined) return s;
  return s == Status::kProved ? Status::kRefuted : Status::kProved;
}

std::vector<TaggedLiteral> ConclusionSet::Conclusions() const {
  std::vector<TaggedLiteral> out;
  for (const auto& [key, s] : entries_) {
    if (s == Status::kUndetermined) continue;
    out.push_back({s == Status::kProved ? Sign::kPlus : Sign::kMinus, key.tag,
                   key.mode, key.literal});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConclusionSet ComputeConclusions(const DefeasibleTheory& theory) {
  const ValidationReport report = ValidateTheory(theory);
  if (!report.ok())
    throw std::invalid_argument("invalid theory: " + report.errors.front());
  Evaluator eval(theory);
  ConclusionSet out;
  out.iterations_ = eval.Run();
  eval.Export(out.entries_, out.literals_);
  return out;
}

Status Holds(const DefeasibleTheory& theory, const TaggedLiteral& q) {
  return ComputeConclusions(theory).Query(q);
}

std::string_view ProofStandardName(ProofStandard s) {
  switch (s) {
    case ProofStandard::kScintilla: return "scintilla";
    case ProofStandard::kSubstantial: return "substantial";
    case ProofStandard::kPreponderance: return "preponderance";
    case ProofStandard::kBeyondReasonableDoubt: return "beyond_reasonable_doubt";
    case ProofStandard::kDialecticalValidity: return "dialectical_validity";
  }
  return "?";
}

bool StandardsReport::Meets(ProofStandard s) const {
  return std::find(met.begin(), met.end(), s) != met.end();
}

StandardsReport StandardsMet(const ConclusionSet& full,
                             const ConclusionSet& without_superiority,
                             const Literal& literal, Mode mode) {
  StandardsReport report{literal, mode, {}};
  const auto proved = [&](const ConclusionSet& cs, TagKind t) {
    return cs.status(t, mode, literal) == Status::kProved;
  };
  if (proved(full, TagKind::kSigmaMinus))
    report.met.push_back(ProofStandard::kScintilla);
  if (proved(full, TagKind::kSigma))
    report.met.push_back(ProofStandard::kSubstantial);
  if (proved(full, TagKind::kPartial))
    report.met.push_back(ProofStandard::kPreponderance);
  if (proved(full, TagKind::kDelta))
    report.met.push_back(ProofStandard::kBeyondReasonableDoubt);
  if (proved(without_superiority, TagKind::kDelta))
    report.met.push_back(ProofStandard::kDialecticalValidity);
  return report;
}

StandardsReport StandardsMet(const DefeasibleTheory& theory,
                             const Literal& literal, Mode mode) {
  return StandardsMet(ComputeConclusions(theory),
                      ComputeConclusions(WithoutSuperiority(theory)), literal,
                      mode);
}

std::strong_ordering StrengthOrder(Sign sign_a, TagKind a, Sign sign_b,
                                   TagKind b) {
  if (sign_a != sign_b)
    throw std::invalid_argument("strength order needs tags of the same sign");
  const auto rank = [&](TagKind t) {
    const int i = TagIndex(t);
    return sign_a == Sign::kPlus ? i : 3 - i;
  };
  return rank(a) <=> rank(b);
}

}  // namespace ddl

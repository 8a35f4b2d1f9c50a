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

#ifndef DDL_THEORY_HPP_
#define DDL_THEORY_HPP_

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ddl {

using RuleId = std::string;

// True iff `text` matches [a-z][A-Za-z0-9_]*.
bool IsIdentifier(std::string_view text);

struct Literal {
  std::string atom;
  bool positive = true;

  Literal() = default;
  Literal(std::string a, bool pos = true);

  // Parses "b" or "~b". Throws std::invalid_argument on bad syntax.
  static Literal Parse(std::string_view text);

  std::string ToString() const;

  friend auto operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    // Positive before negative.
    return b.positive <=> a.positive;
  }
  friend bool operator==(const Literal&, const Literal&) = default;
};

Literal Complement(const Literal& l);

enum class Mode { kEvidential, kObligation };

// Signs used by conclusions and annotations.
enum class Sign { kPlus, kMinus };

// Proof tags, strongest positive first.
enum class TagKind { kDelta, kPartial, kSigma, kSigmaMinus };

inline constexpr TagKind kAllTags[] = {TagKind::kDelta, TagKind::kPartial,
                                       TagKind::kSigma, TagKind::kSigmaMinus};
inline constexpr Mode kAllModes[] = {Mode::kEvidential, Mode::kObligation};

// "E" / "O".
std::string_view ModeCode(Mode m);
// "d" / "p" / "s" / "w" as used in the rule language.
char TagCode(TagKind t);
// "delta" / "partial" / "sigma" / "sigma_minus".
std::string_view TagName(TagKind t);
// δ ∂ σ σ⁻
std::string_view TagGlyph(TagKind t);
std::optional<TagKind> TagFromCode(char c);

struct ModalLiteral {
  Mode mode = Mode::kEvidential;
  Literal literal;

  std::string ToString() const;  // "b", "O ~b"

  friend auto operator<=>(const ModalLiteral&, const ModalLiteral&) = default;
  friend bool operator==(const ModalLiteral&, const ModalLiteral&) = default;
};

struct TaggedLiteral {
  Sign sign = Sign::kPlus;
  TagKind tag = TagKind::kDelta;
  Mode mode = Mode::kEvidential;
  Literal literal;

  // Query syntax, e.g. "+d b", "-p O ~b".
  std::string ToString() const;
  // Glyph rendering, e.g. "+∂_O ~b".
  std::string ToGlyphString() const;

  friend auto operator<=>(const TaggedLiteral&, const TaggedLiteral&) = default;
  friend bool operator==(const TaggedLiteral&, const TaggedLiteral&) = default;
};

struct Annotation {
  Sign sign = Sign::kPlus;
  TagKind tag = TagKind::kDelta;

  friend auto operator<=>(const Annotation&, const Annotation&) = default;
  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct Antecedent {
  Mode mode = Mode::kEvidential;
  Literal literal;
  // Present only on annotated antecedents; fixes the required conclusion
  // independent of the tag being derived.
  std::optional<Annotation> annotation;

  std::string ToString() const;

  friend auto operator<=>(const Antecedent&, const Antecedent&) = default;
  friend bool operator==(const Antecedent&, const Antecedent&) = default;
};

struct Rule {
  RuleId id;
  std::vector<Antecedent> antecedents;
  Mode head_mode = Mode::kEvidential;
  Literal head;

  // "r1: a, O b => ~c" without the leading keyword or trailing period.
  std::string ToString() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

using SuperiorityPair = std::pair<RuleId, RuleId>;  // (stronger, weaker)

struct DefeasibleTheory {
  std::set<ModalLiteral> facts;
  std::vector<Rule> rules;
  std::set<SuperiorityPair> superiority;

  const Rule* FindRule(std::string_view id) const;
  bool HasAnnotations() const;

  friend bool operator==(const DefeasibleTheory&,
                         const DefeasibleTheory&) = default;
};

// The theory with the superiority relation dropped.
DefeasibleTheory WithoutSuperiority(DefeasibleTheory theory);

struct Claim {
  // The a_k. The deontic half is {O ~a_k}, derived on demand.
  std::vector<Literal> evidential;

  bool empty() const { return evidential.empty(); }
  std::vector<ModalLiteral> Deontic() const;
  bool Contains(const Literal& l) const;

  friend bool operator==(const Claim&, const Claim&) = default;
};

enum class Player { kPr, kDef };

std::string_view PlayerName(Player p);  // "pr" / "def"
inline Player Opponent(Player p) {
  return p == Player::kPr ? Player::kDef : Player::kPr;
}

struct GameSetup {
  std::set<ModalLiteral> common_facts;
  std::vector<Rule> common_rules;
  std::vector<Rule> pr_private;
  std::vector<Rule> def_private;
  std::set<SuperiorityPair> superiority;
  Claim claim;
  TagKind evidential_standard = TagKind::kDelta;
  TagKind deontic_standard = TagKind::kPartial;

  // Facts, all rules and the full superiority relation.
  DefeasibleTheory UnionTheory() const;
  const std::vector<Rule>& PrivateRules(Player p) const {
    return p == Player::kPr ? pr_private : def_private;
  }

  friend bool operator==(const GameSetup&, const GameSetup&) = default;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool superiority_cycle = false;
  bool conflicting_modal_facts = false;

  bool ok() const { return errors.empty(); }
  // Both preconditions of the obligation/permission results hold.
  bool deontically_consistent() const {
    return !superiority_cycle && !conflicting_modal_facts;
  }
};

ValidationReport ValidateTheory(const DefeasibleTheory& theory);
// Theory checks over the union plus disjointness of the three rule pools.
ValidationReport ValidateSetup(const GameSetup& setup);

// Common facts and rules plus the player's private rules; superiority is
// restricted to pairs whose endpoints are both in the view.
DefeasibleTheory PlayerView(const GameSetup& setup, Player player);

// Restricts a superiority relation to ids in `ids`.
std::set<SuperiorityPair> RestrictSuperiority(
    const std::set<SuperiorityPair>& sup, const std::set<RuleId>& ids);

}  // namespace ddl

#endif  // DDL_THEORY_HPP_

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

// Tagged-conclusion computation for defeasible deontic theories.
//
// All four proof tags in both modes are computed together as the least
// fixpoint of one monotone operator: ambiguity propagation consults
// support when discarding attackers, and support consults ambiguity
// propagation when checking superior counter-rules, so the tags cannot be
// computed independently. Negative conclusions are derived constructively
// in the same pass; keys that are neither proved nor refuted at the
// fixpoint stay undetermined (this happens only with cyclic rule chains).

#ifndef DDL_ENGINE_HPP_
#define DDL_ENGINE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ddl/theory.hpp"

namespace ddl {

enum class Status { kProved, kRefuted, kUndetermined };

std::string_view StatusName(Status s);  // "proved" / "refuted" / "undetermined"

struct ConclusionKey {
  TagKind tag;
  Mode mode;
  Literal literal;

  friend auto operator<=>(const ConclusionKey&, const ConclusionKey&) = default;
  friend bool operator==(const ConclusionKey&, const ConclusionKey&) = default;
};

class ConclusionSet {
 public:
  ConclusionSet() = default;

  // Status of the key. Literals outside the theory's vocabulary have no
  // rules and no facts, hence are refuted at every tag.
  Status status(TagKind tag, Mode mode, const Literal& l) const;

  // Status of a signed query: for a negative query, PROVED means the
  // negative conclusion was derived and REFUTED means the positive one was.
  Status Query(const TaggedLiteral& q) const;
  bool Proves(const TaggedLiteral& q) const {
    return Query(q) == Status::kProved;
  }

  // Every determined conclusion as a signed tagged literal, sorted.
  std::vector<TaggedLiteral> Conclusions() const;
  const std::map<ConclusionKey, Status>& entries() const { return entries_; }
  const std::vector<Literal>& literals() const { return literals_; }

  // Number of sweeps the fixpoint needed, including the final quiet one.
  int iterations() const { return iterations_; }

  friend bool operator==(const ConclusionSet& a, const ConclusionSet& b) {
    return a.entries_ == b.entries_;
  }

 private:
  friend ConclusionSet ComputeConclusions(const DefeasibleTheory&);

  std::map<ConclusionKey, Status> entries_;
  std::vector<Literal> literals_;
  int iterations_ = 0;
};

// Pre: the theory has no hard validation errors (throws
// std::invalid_argument otherwise).
ConclusionSet ComputeConclusions(const DefeasibleTheory& theory);

Status Holds(const DefeasibleTheory& theory, const TaggedLiteral& q);

enum class ProofStandard {
  kScintilla,
  kSubstantial,  // also known as clear and convincing evidence
  kPreponderance,
  kBeyondReasonableDoubt,
  kDialecticalValidity,
};

std::string_view ProofStandardName(ProofStandard s);

struct StandardsReport {
  Literal literal;
  Mode mode = Mode::kEvidential;
  std::vector<ProofStandard> met;  // weakest first

  bool Meets(ProofStandard s) const;
};

StandardsReport StandardsMet(const DefeasibleTheory& theory,
                             const Literal& literal, Mode mode);
// Same, reusing conclusion sets for D and for D without superiority.
StandardsReport StandardsMet(const ConclusionSet& full,
                             const ConclusionSet& without_superiority,
                             const Literal& literal, Mode mode);

// Orders two signed tags of the same sign by strength: negative result
// means `a` is stronger. Throws std::invalid_argument on mixed signs.
std::strong_ordering StrengthOrder(Sign sign_a, TagKind a, Sign sign_b,
                                   TagKind b);

}  // namespace ddl

#endif  // DDL_ENGINE_HPP_

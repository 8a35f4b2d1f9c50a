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

// Judicial (weak) permission: l is #-weakly permitted when -#_O ~l is
// derivable, for # in {delta, partial}.

#ifndef DDL_PERMISSION_HPP_
#define DDL_PERMISSION_HPP_

#include <string>
#include <vector>

#include "ddl/engine.hpp"
#include "ddl/theory.hpp"

namespace ddl {

struct GameTrace;

enum class Permission { kWeaklyPermitted, kNotPermitted, kUndetermined };

std::string_view PermissionName(Permission p);

struct PermissionStatus {
  Literal literal;
  TagKind tag = TagKind::kPartial;
  Permission status = Permission::kUndetermined;
  TaggedLiteral witness;  // -tag_O ~literal
};

// Throws std::invalid_argument unless tag is delta or partial.
PermissionStatus WeaklyPermitted(const ConclusionSet& conclusions,
                                 const Literal& l, TagKind tag);
PermissionStatus WeaklyPermitted(const DefeasibleTheory& theory,
                                 const Literal& l, TagKind tag);

struct OblPermViolation {
  TagKind tag;
  Literal literal;  // +tag_O literal holds but -tag_O ~literal does not
};

struct PropertyReport {
  // Preconditions (acyclic superiority, no O l / O ~l fact pair) fail.
  bool vacuous = false;
  std::vector<OblPermViolation> violations;

  bool holds() const { return vacuous || violations.empty(); }
};

// Checks +#_O l => -#_O ~l (equivalently, +#_O l => l is #-weakly
// permitted) for every literal of the theory and every tag in `tags`.
// Tags outside {delta, partial} are accepted for demonstration purposes.
PropertyReport CheckObligationPermission(
    const DefeasibleTheory& theory,
    const std::vector<TagKind>& tags = {TagKind::kDelta, TagKind::kPartial});

// Weak permission in a terminated game, evaluated on the final theory.
// Throws std::invalid_argument for a non-terminal trace or a literal that
// is not a claim element.
PermissionStatus GameWeaklyPermitted(const GameTrace& trace, const Literal& l,
                                     TagKind tag);

}  // namespace ddl

#endif  // DDL_PERMISSION_HPP_

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

#include "ddl/permission.hpp"

#include <stdexcept>

#include "ddl/game.hpp"

namespace ddl {

std::string_view PermissionName(Permission p) {
  switch (p) {
    case Permission::kWeaklyPermitted: return "weakly_permitted";
    case Permission::kNotPermitted: return "not_permitted";
    case Permission::kUndetermined: return "undetermined";
  }
  return "?";
}

PermissionStatus WeaklyPermitted(const ConclusionSet& conclusions,
                                 const Literal& l, TagKind tag) {
  if (tag != TagKind::kDelta && tag != TagKind::kPartial)
    throw std::invalid_argument("weak permission is defined for tags d and p");
  PermissionStatus ps;
  ps.literal = l;
  ps.tag = tag;
  ps.witness = {Sign::kMinus, tag, Mode::kObligation, Complement(l)};
  switch (conclusions.Query(ps.witness)) {
    case Status::kProved: ps.status = Permission::kWeaklyPermitted; break;
    case Status::kRefuted: ps.status = Permission::kNotPermitted; break;
    case Status::kUndetermined: ps.status = Permission::kUndetermined; break;
  }
  return ps;
}

PermissionStatus WeaklyPermitted(const DefeasibleTheory& theory,
                                 const Literal& l, TagKind tag) {
  return WeaklyPermitted(ComputeConclusions(theory), l, tag);
}

PropertyReport CheckObligationPermission(const DefeasibleTheory& theory,
                                         const std::vector<TagKind>& tags) {
  PropertyReport report;
  const ValidationReport v = ValidateTheory(theory);
  if (v.superiority_cycle || !v.deontically_consistent()) {
    report.vacuous = true;
    return report;
  }
  const ConclusionSet cs = ComputeConclusions(theory);
  for (TagKind t : tags)
    for (const Literal& l : cs.literals()) {
      const bool obliged = cs.Proves({Sign::kPlus, t, Mode::kObligation, l});
      const bool permitted =
          cs.Proves({Sign::kMinus, t, Mode::kObligation, Complement(l)});
      if (obliged && !permitted) report.violations.push_back({t, l});
    }
  return report;
}

PermissionStatus GameWeaklyPermitted(const GameTrace& trace, const Literal& l,
                                     TagKind tag) {
  if (!IsTerminal(trace.outcome))
    throw std::invalid_argument("the game has not terminated");
  if (!trace.setup.claim.Contains(l))
    throw std::invalid_argument("'" + l.ToString() +
                                "' is not a claim element");
  return WeaklyPermitted(*trace.final_conclusions, l, tag);
}

}  // namespace ddl

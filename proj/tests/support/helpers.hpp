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

#ifndef DDL_TESTS_SUPPORT_HELPERS_HPP_
#define DDL_TESTS_SUPPORT_HELPERS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "ddl/engine.hpp"
#include "ddl/parser.hpp"

namespace ddl::testing {

inline GameSetup Setup(std::string_view text) {
  auto r = ParseTheory(text);
  if (!r) throw std::runtime_error(r.errors.front().ToString());
  return *r.value;
}

inline DefeasibleTheory Theory(std::string_view text) {
  return Setup(text).UnionTheory();
}

inline TaggedLiteral Q(std::string_view text) {
  auto r = ParseQuery(text);
  if (!r) throw std::runtime_error(r.errors.front().ToString());
  return *r.value;
}

inline Status Ask(const ConclusionSet& cs, std::string_view q) {
  return cs.Query(Q(q));
}

}  // namespace ddl::testing

#endif  // DDL_TESTS_SUPPORT_HELPERS_HPP_

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

// Machine-readable renderings. Keys keep insertion order so that dumps are
// byte-stable.

#ifndef DDL_JSON_HPP_
#define DDL_JSON_HPP_

#include <json.hpp>

#include "ddl/argumentation.hpp"
#include "ddl/engine.hpp"
#include "ddl/game.hpp"
#include "ddl/parser.hpp"
#include "ddl/permission.hpp"
#include "ddl/strategy.hpp"
#include "ddl/theory.hpp"

namespace ddl {

using Json = nlohmann::ordered_json;

// {"literal":"~b","mode":"O","tag":"partial","status":"proved"}
Json ToJson(const ConclusionKey& key, Status status);
// A signed conclusion: + renders as "proved", - as "refuted".
Json ToJson(const TaggedLiteral& conclusion);
// Every key of the set, in key order.
Json ToJson(const ConclusionSet& conclusions);

Json ToJson(const ModalLiteral& l);  // ["E","b"]
Json ToJson(const Rule& rule);
Json ToJson(const GameSetup& setup);
Json ToJson(const ValidationReport& report);
Json ToJson(const ParseError& error);
Json ToJson(const StandardsReport& report);
Json ToJson(const PermissionStatus& status);
Json ToJson(const LegalityReport& report);
Json ToJson(const GameTrace& trace);
Json ToJson(const Analysis& analysis);
Json ToJson(const DiscrepancyReport& report);

std::string_view WinnerName(Outcome o);  // "pr" / "def" / "stalled"

// Two-space indent, trailing newline.
std::string Dump(const Json& j);

}  // namespace ddl

#endif  // DDL_JSON_HPP_

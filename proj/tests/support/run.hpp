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

// Runs the ddlgame binary and captures its streams.

#ifndef DDL_TESTS_SUPPORT_RUN_HPP_
#define DDL_TESTS_SUPPORT_RUN_HPP_

#include <string>

namespace ddl::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// `args` is appended to the binary path verbatim (shell syntax).
CliResult RunCli(const std::string& args);

// Writes `content` to a fresh file under the temp directory.
std::string TempFile(const std::string& name, const std::string& content);

}  // namespace ddl::testing

#endif  // DDL_TESTS_SUPPORT_RUN_HPP_

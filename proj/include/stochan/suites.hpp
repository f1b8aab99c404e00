// Copyright 2026 The stochan Authors
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

#ifndef STOCHAN_SUITES_HPP
#define STOCHAN_SUITES_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stochan::suites {

/// Outcome of one reproducibility check. `detail` carries the measured
/// worst-case quantity so failing lines are self-explanatory.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Number of checks; ids run from 1 to this value.
int check_count();

CheckResult run_check(int id);

/// Ids belonging to a named suite (thm1, thm2-3, thm4, lemma1, designs, all).
std::optional<std::vector<int>> suite_checks(const std::string& name);

/// "PASS [id] name: detail" or "FAIL [id] name: detail".
std::string format(const CheckResult& result);

/// Runs a suite and prints one line per check. Returns true iff all pass.
/// Throws std::invalid_argument for an unknown suite name.
bool run_suite(const std::string& name, std::ostream& out);

}  // namespace stochan::suites

#endif  // STOCHAN_SUITES_HPP

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


// Runs every reproducibility check and prints one PASS/FAIL line each.
// Optional arguments select check ids.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "stochan/suites.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int id = 1; id <= stochan::suites::check_count(); ++id) ids.push_back(id);
  }
  int failed = 0;
  for (const int id : ids) {
    const auto r = stochan::suites::run_check(id);
    std::cout << stochan::suites::format(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}

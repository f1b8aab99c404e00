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

#ifndef STOCHAN_REPORT_HPP
#define STOCHAN_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stochan/channel.hpp"
#include "stochan/diamond.hpp"

namespace stochan {

struct AnalysisReport {
  std::string channel_id;
  Index dim = 0;
  CptpReport cptp;
  std::optional<double> stochastic_lambda;
  double process_fidelity = 0.0;
  double process_infidelity = 0.0;
  std::optional<DiamondResult> diamond;
  std::vector<std::string> notes;
};

struct AnalyzeOptions {
  bool diamond = false;
  double stochastic_tol = 1e-9;
  DiamondOptions diamond_options;
};

/// Full analysis of one channel. The diamond distance is only computed for
/// CPTP input; otherwise a note explains why it is missing.
AnalysisReport analyze(const Channel& phi, const std::string& channel_id,
                       const AnalyzeOptions& options = {});

/// Rounds to 12 significant digits so printed reports are stable.
double round12(double value);

nlohmann::ordered_json to_json(const CptpReport& report);
nlohmann::ordered_json to_json(const DiamondResult& result);
nlohmann::ordered_json to_json(const AnalysisReport& report);

}  // namespace stochan

#endif  // STOCHAN_REPORT_HPP

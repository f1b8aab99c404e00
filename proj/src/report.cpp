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


#include "stochan/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "stochan/stochastic.hpp"

namespace stochan {

using nlohmann::ordered_json;

double round12(double value) {
  if (!std::isfinite(value)) return value;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  const double out = std::strtod(buffer, nullptr);
  return out == 0.0 ? 0.0 : out;  // no "-0"
}

AnalysisReport analyze(const Channel& phi, const std::string& channel_id,
                       const AnalyzeOptions& options) {
  AnalysisReport r;
  r.channel_id = channel_id;
  r.dim = phi.dim();
  r.cptp = validate_cptp(phi);
  r.process_fidelity = process_fidelity(phi);
  r.process_infidelity = 1.0 - r.process_fidelity;
  if (r.cptp.is_cptp()) {
    r.stochastic_lambda = stochastic_eigenvalue(phi, options.stochastic_tol);
  } else {
    r.notes.push_back("not CPTP; stochastic detection skipped");
  }
  if (r.stochastic_lambda && !r.cptp.is_unital) {
    r.notes.push_back("stochastic and non-unital");
  }
  if (options.diamond) {
    if (r.cptp.is_cptp()) {
      r.diamond = diamond_distance(phi, options.diamond_options);
      if (r.diamond->method == DiamondMethod::kSeesawOnly) {
        r.notes.push_back("SDP did not converge; value is the best certified "
                          "lower bound");
      }
    } else {
      r.notes.push_back("diamond distance requires a CPTP channel");
    }
  }
  return r;
}

ordered_json to_json(const CptpReport& report) {
  ordered_json j;
  j["is_cp"] = report.is_cp;
  j["min_choi_eigenvalue"] = round12(report.min_choi_eigenvalue);
  j["is_tp"] = report.is_tp;
  j["tp_residual"] = round12(report.tp_residual);
  j["is_unital"] = report.is_unital;
  j["unitality_residual"] = round12(report.unitality_residual);
  return j;
}

ordered_json to_json(const DiamondResult& result) {
  ordered_json j;
  j["value"] = round12(result.value);
  j["primal_bound"] = round12(result.primal_bound);
  j["dual_bound"] = round12(result.dual_bound);
  j["gap"] = round12(result.gap);
  j["method"] = to_string(result.method);
  return j;
}

ordered_json to_json(const AnalysisReport& report) {
  ordered_json j;
  j["channel_id"] = report.channel_id;
  j["dim"] = report.dim;
  j["cptp"] = to_json(report.cptp);
  j["stochastic_lambda"] = report.stochastic_lambda
                               ? ordered_json(round12(*report.stochastic_lambda))
                               : ordered_json(nullptr);
  j["process_fidelity"] = round12(report.process_fidelity);
  j["process_infidelity"] = round12(report.process_infidelity);
  j["diamond"] = report.diamond ? to_json(*report.diamond) : ordered_json(nullptr);
  j["notes"] = report.notes;
  return j;
}

}  // namespace stochan

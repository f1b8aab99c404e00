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


#include "stochan/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "stochan/errors.hpp"
#include "stochan/io.hpp"
#include "stochan/report.hpp"
#include "stochan/stochastic.hpp"
#include "stochan/suites.hpp"
#include "stochan/twirl.hpp"

namespace stochan::cli {

namespace {

using nlohmann::ordered_json;

struct AnalyzeArgs {
  std::string channel;
  bool diamond = false;
  bool force_sdp = false;
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

struct TwirlArgs {
  std::string channel;
  std::string design;
  std::string method = "choi";
  std::string out;
  double tol = 1e-9;
};

struct DiamondArgs {
  std::string channel;
  bool force_sdp = false;
  std::uint64_t seed = 1;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Channel phi = io::parse_channel_spec(a.channel);
  AnalyzeOptions opt;
  opt.diamond = a.diamond;
  opt.stochastic_tol = a.tol;
  opt.diamond_options.force_sdp = a.force_sdp;
  opt.diamond_options.seed = a.seed;
  const AnalysisReport report = analyze(phi, a.channel, opt);
  out << to_json(report).dump(2) << '\n';
  return report.cptp.is_cptp() ? kOk : kUserError;
}

int cmd_twirl(const TwirlArgs& a, std::ostream& out, std::ostream& err) {
  const Channel phi = io::parse_channel_spec(a.channel);
  const UnitaryDesign mu = io::parse_design_spec(a.design);
  if (mu.dim != phi.dim()) {
    throw DimensionError("channel has dimension " + std::to_string(phi.dim()) +
                         ", design " + std::to_string(mu.dim));
  }
  const DesignCheck check = verify_1design(mu);
  if (!check.passes) {
    err << "warning: design fails the 1-design test (residual "
        << round12(check.residual) << ")\n";
  }

  std::optional<Channel> by_definition;
  std::optional<Channel> by_choi;
  if (a.method == "definition" || a.method == "both") {
    by_definition = twirl_definition(phi, mu);
  }
  if (a.method == "choi" || a.method == "both") by_choi = twirl_choi(phi, mu);
  const Channel& result = by_choi ? *by_choi : *by_definition;

  const CptpReport cptp = validate_cptp(result);
  const auto lambda = stochastic_eigenvalue(result, a.tol);
  ordered_json j;
  j["channel_id"] = a.channel;
  j["design"] = a.design;
  j["method"] = a.method;
  j["dim"] = result.dim();
  j["design_residual"] = round12(check.residual);
  j["input_process_fidelity"] = round12(process_fidelity(phi));
  j["stochastic_lambda"] = lambda ? ordered_json(round12(*lambda)) : ordered_json(nullptr);
  j["unitality_residual"] = round12(cptp.unitality_residual);
  j["is_unital"] = cptp.is_unital;
  if (by_definition && by_choi) {
    j["definition_choi_deviation"] =
        round12(max_abs_diff(by_definition->choi(), by_choi->choi()));
  }
  if (a.out.empty()) {
    j["channel"] = io::channel_to_json(result);
  } else {
    io::write_json_file(a.out, io::channel_to_json(result));
    j["output"] = a.out;
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_diamond(const DiamondArgs& a, std::ostream& out) {
  const Channel phi = io::parse_channel_spec(a.channel);
  DiamondOptions opt;
  opt.force_sdp = a.force_sdp;
  opt.seed = a.seed;
  const DiamondResult r = diamond_distance(phi, opt);
  ordered_json j;
  j["channel_id"] = a.channel;
  j["dim"] = phi.dim();
  j["process_infidelity"] = round12(process_infidelity(phi));
  j["diamond"] = to_json(r);
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Stochastic quantum channel toolkit", "stochan"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "CPTP, stochasticity, fidelity and diamond distance");
  analyze_cmd->add_option("channel", analyze_args.channel, "constructor key or channel file")->required();
  analyze_cmd->add_flag("--diamond", analyze_args.diamond, "also compute the diamond distance");
  analyze_cmd->add_flag("--force-sdp", analyze_args.force_sdp, "skip the stochastic closed form");
  analyze_cmd->add_option("--seed", analyze_args.seed, "see-saw seed");
  analyze_cmd->add_option("--tol", analyze_args.tol, "stochastic detection tolerance")
      ->check(CLI::PositiveNumber);

  TwirlArgs twirl_args;
  auto* twirl_cmd = app.add_subcommand("twirl", "twirl a channel over a unitary design");
  twirl_cmd->add_option("--channel", twirl_args.channel, "constructor key or channel file")->required();
  twirl_cmd->add_option("--design", twirl_args.design, "pauli:n, wh:d, rotated:<key>:<file> or design file")
      ->required();
  twirl_cmd->add_option("--method", twirl_args.method, "definition, choi or both")
      ->check(CLI::IsMember({"definition", "choi", "both"}));
  twirl_cmd->add_option("--out", twirl_args.out, "write the twirled channel here");
  twirl_cmd->add_option("--tol", twirl_args.tol, "stochastic detection tolerance")
      ->check(CLI::PositiveNumber);

  DiamondArgs diamond_args;
  auto* diamond_cmd = app.add_subcommand("diamond", "diamond distance to the identity");
  diamond_cmd->add_option("--channel", diamond_args.channel, "constructor key or channel file")->required();
  diamond_cmd->add_flag("--force-sdp", diamond_args.force_sdp, "skip the stochastic closed form");
  diamond_cmd->add_option("--seed", diamond_args.seed, "see-saw seed");

  std::string suite;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "run a reproducibility suite");
  reproduce_cmd->add_option("suite", suite, "thm1, thm2-3, thm4, lemma1, designs or all")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, out);
    if (*twirl_cmd) return cmd_twirl(twirl_args, out, err);
    if (*diamond_cmd) return cmd_diamond(diamond_args, out);
    if (*reproduce_cmd) {
      if (!suites::suite_checks(suite)) {
        err << "error: unknown suite '" << suite << "'\n";
        return kUserError;
      }
      return suites::run_suite(suite, out) ? kOk : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::invalid_argument& e) {
    // DimensionError, MatrixPropertyError, ParameterError, NotCptpError, ...
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace stochan::cli

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

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "stochan/io.hpp"

using namespace stochan;
using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("stochan_cli_" + name)).string();
}

}  // namespace

TEST(cli, analyze_example_with_diamond) {
  const Outcome r = run({"analyze", "paper-example:0.9,4", "--diamond"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["stochastic_lambda"].get<double>(), 0.9);
  EXPECT_DOUBLE_EQ(j["diamond"]["value"].get<double>(), 0.1);
  EXPECT_EQ(j["diamond"]["method"], "stochastic_fast_path");
  EXPECT_FALSE(j["cptp"]["is_unital"].get<bool>());
}

TEST(cli, analyze_identity_and_depolarizing) {
  Outcome r = run({"analyze", "identity", "--diamond"});
  ASSERT_EQ(r.code, cli::kOk);
  json j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["process_fidelity"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["stochastic_lambda"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["diamond"]["value"].get<double>(), 0.0);

  r = run({"analyze", "depolarizing:0.8"});
  ASSERT_EQ(r.code, cli::kOk);
  j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["stochastic_lambda"].get<double>(), 0.85);
  EXPECT_DOUBLE_EQ(j["process_infidelity"].get<double>(), 0.15);
  EXPECT_TRUE(j["diamond"].is_null());
}

TEST(cli, report_field_order_and_rounding) {
  const Outcome a = run({"analyze", "random:2,5", "--diamond"});
  const Outcome b = run({"analyze", "random:2,5", "--diamond"});
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(a.out);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"channel_id", "dim", "cptp", "stochastic_lambda",
                                             "process_fidelity", "process_infidelity",
                                             "diamond", "notes"}));
}

TEST(cli, invalid_channels_exit_2) {
  const std::string path = temp_path("scaled.json");
  io::write_json_file(path, {{"dim", 1}, {"kraus", {{{{0.5, 0.0}}}}}});
  Outcome r = run({"analyze", path});
  EXPECT_EQ(r.code, cli::kUserError);
  EXPECT_FALSE(json::parse(r.out)["cptp"]["is_tp"].get<bool>());
  EXPECT_EQ(run({"analyze", "/no/such/file.json"}).code, cli::kUserError);
  EXPECT_EQ(run({"analyze", "bz:1,1,1,0"}).code, cli::kUserError);
  EXPECT_EQ(run({"diamond", "--channel", path}).code, cli::kUserError);
  EXPECT_EQ(run({"analyze"}).code, cli::kUserError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUserError);
}

TEST(cli, twirl_both_methods) {
  const std::string out = temp_path("twirled.json");
  const Outcome r = run({"twirl", "--channel", "random:2,3", "--design", "pauli:1", "--method",
                     "both", "--out", out});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LE(j["definition_choi_deviation"].get<double>(), 1e-11);
  EXPECT_LE(j["unitality_residual"].get<double>(), 1e-10);
  EXPECT_NEAR(j["stochastic_lambda"].get<double>(), j["input_process_fidelity"].get<double>(),
              1e-10);
  EXPECT_EQ(io::parse_channel_spec(out).dim(), 2);
}

TEST(cli, twirl_example_and_mismatch) {
  Outcome r = run({"twirl", "--channel", "paper-example:0.9,4", "--design", "wh:4"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["stochastic_lambda"].get<double>(), 0.9);
  EXPECT_TRUE(j["is_unital"].get<bool>());
  EXPECT_TRUE(j.contains("channel"));

  r = run({"twirl", "--channel", "identity", "--design", "wh:3"});
  EXPECT_EQ(r.code, cli::kUserError);
  r = run({"twirl", "--channel", "identity", "--design", "wh:2", "--method", "other"});
  EXPECT_EQ(r.code, cli::kUserError);
}

TEST(cli, diamond_command) {
  const Outcome r = run({"diamond", "--channel", "depolarizing:0.8", "--force-sdp"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["diamond"]["value"].get<double>(), 0.15, 1e-6);
  EXPECT_EQ(j["diamond"]["method"], "sdp");
  EXPECT_LE(j["diamond"]["gap"].get<double>(), 1e-6);
}

TEST(cli, reproduce) {
  const Outcome r = run({"reproduce", "designs"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("PASS [9]", 0), 0u);
  EXPECT_EQ(run({"reproduce", "nosuch"}).code, cli::kUserError);
}

// Copyright 2026 The RAE Authors
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


#include "rae/cli.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace rae::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RAE_SOURCE_DIR) + "/data/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("rae_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, BafListsRunningExampleExtensions) {
  const Invocation r = run({"baf", "--input", data("running_example.baf"), "--semantics", "s-preferred"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("semantics"), "s-preferred");
  EXPECT_EQ(j.at("extensions"), nlohmann::json::parse("[[1, 6], [3, 4, 8, 9]]"));
  const Invocation csv = run({"baf", "--input", data("running_example.baf"), "--format", "csv"});
  EXPECT_EQ(csv.out, "extension,arguments\n0,1 6\n1,3 4 8 9\n");
}

TEST(Cli, BafNonMaximalSemanticsListsAllSets) {
  const std::string path = temp_file("chain.baf", "args 2\natt 0 1\n");
  const Invocation r = run({"baf", "--input", path, "--semantics", "conflict-free", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "extension,arguments\n0,\n1,0\n2,1\n");
}

TEST(Cli, RobustOnRunningExampleHasNoCounterfactuals) {
  const Invocation r = run({"ensemble", "--instance", data("running_example.json"), "--method", "robust"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("models"), nlohmann::json::parse("[0, 1, 2]"));
  EXPECT_TRUE(j.at("ces").empty());
  EXPECT_EQ(j.at("label"), 0);
  EXPECT_EQ(j.at("method"), "robust");
}

TEST(Cli, ArgumentativeWithPreferences) {
  const Invocation r = run({"ensemble", "--instance", data("running_example.json"), "--method", "argumentative", "--prefs",
                     "accuracy>simplicity", "--all-solutions"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("solutions").size(), 1u);
  EXPECT_EQ(j.at("solutions")[0].at("models"), nlohmann::json::parse("[3, 4]"));
  EXPECT_EQ(j.at("solutions")[0].at("ces"), nlohmann::json::parse("[3, 4]"));
  EXPECT_EQ(j.at("multiple"), false);
  EXPECT_EQ(j.at("same_label"), false);
}

TEST(Cli, SingleModelGivesItsPair) {
  const Invocation r = run({"ensemble", "--instance", data("single.json"), "--method", "argumentative"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("models"), nlohmann::json::parse("[0]"));
  EXPECT_EQ(j.at("ces"), nlohmann::json::parse("[0]"));
  EXPECT_EQ(j.at("tiebreak").at("num_candidates"), 1);
}

TEST(Cli, TieBreaksFollowTheSeed) {
  const std::string path = temp_file(
      "tie.json", R"({"labels":[0,1],"pred_x":[0,0,1,1],"pred_ce":[[1,1,1,1],[1,1,1,1],[0,0,0,0],[0,0,0,0]]})");
  std::set<std::string> labels;
  for (int seed = 0; seed < 12; ++seed) {
    const std::vector<std::string> args = {"ensemble", "--instance", path, "--method", "naive", "--seed",
                                           std::to_string(seed)};
    const Invocation a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j.at("tiebreak").at("seed"), seed);
    EXPECT_EQ(j.at("tiebreak").at("num_candidates"), 2);
    labels.insert(j.at("label").dump());
  }
  EXPECT_EQ(labels.size(), 2u);
  const Invocation all = run({"ensemble", "--instance", path, "--method", "augmented", "--all-solutions"});
  const auto j = nlohmann::json::parse(all.out);
  EXPECT_EQ(j.at("solutions").size(), 2u);
  EXPECT_EQ(j.at("multiple"), true);
  EXPECT_EQ(j.at("same_label"), false);
}

TEST(Cli, CheckPropertiesReportsWitnesses) {
  const Invocation r = run({"check-properties", "--instance", data("running_example.json"), "--method", "augmented"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("properties").at("counterfactual_validity"), false);
  EXPECT_EQ(j.at("properties").at("witnesses").at("counterfactual_validity"), "c1 is invalid for M0");
  EXPECT_EQ(j.at("solution").at("method"), "augmented");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"ensemble", "--instance", data("running_example.json")}).code, 2);
  EXPECT_EQ(run({"ensemble", "--instance", data("running_example.json"), "--method", "bagging"}).code, 2);
  EXPECT_EQ(run({"baf", "--input", data("running_example.baf"), "--semantics", "grounded"}).code, 2);
  EXPECT_EQ(run({"baf", "--input", data("running_example.baf"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"ensemble", "--instance", "/nonexistent.json", "--method", "naive"}).code, 2);
  EXPECT_EQ(run({"ensemble", "--instance", data("running_example.json"), "--method", "naive", "--tiebreak", "coin"}).code, 2);
  EXPECT_EQ(run({"ensemble", "--instance", data("running_example.json"), "--method", "argumentative", "--prefs", "accuracy>"}).code,
            2);

  const Invocation bad = run({"ensemble", "--instance", temp_file("bad.json", R"({"labels":[0,1],"pred_x":[0]})"),
                       "--method", "naive"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.err.find("schema_violation"), std::string::npos);
  EXPECT_EQ(run({"ensemble", "--instance", temp_file("junk.json", "{"), "--method", "naive"}).code, 3);
  EXPECT_EQ(run({"ensemble", "--instance", data("running_example.json"), "--method", "argumentative", "--prefs", "speed"}).code,
            3);
  EXPECT_EQ(run({"baf", "--input", temp_file("bad.baf", "args 2\natt 0 5\n")}).code, 3);
  EXPECT_EQ(run({"experiment", "--config", temp_file("bad_cfg.json", R"({"repeats": 0})")}).code, 3);

  EXPECT_EQ(run({"baf", "--input", temp_file("big.baf", "args 65\n")}).code, 4);
  EXPECT_EQ(run({"baf", "--input", temp_file("wide.baf", "args 21\n"), "--semantics", "safe"}).code, 4);
  EXPECT_EQ(run({"experiment", "--config",
                 temp_file("cap_cfg.json", R"({"pool_size": 40, "set_sizes": [33]})")})
                .code,
            4);
}

TEST(Cli, ExperimentIsDeterministicAndWritesSidecar) {
  const std::vector<std::string> args = {"experiment", "--config", data("quick_experiment.json"), "--format", "csv"};
  const Invocation a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "set_size,method,acc,simp,size_M,size_C,c_val,fail,mv,multiple,same");

  const auto dir = std::filesystem::temp_directory_path();
  const std::string out = (dir / "rae_cli_test_result.csv").string();
  ASSERT_EQ(run({"experiment", "--config", data("quick_experiment.json"), "--out", out}).code, 0);
  std::ifstream csv(out);
  std::stringstream body;
  body << csv.rdbuf();
  EXPECT_EQ(body.str(), a.out);
  std::ifstream js((dir / "rae_cli_test_result.json").string());
  const auto j = nlohmann::json::parse(js);
  EXPECT_TRUE(j.at("rows")[0].at("std").contains("acc"));
  EXPECT_EQ(run({"experiment", "--config", data("quick_experiment.json"), "--out", (dir / "x.json").string()}).code,
            2);
}

TEST(Cli, PreferenceSyntax) {
  EXPECT_EQ(parse_preference(""), PropertyPreference{});
  EXPECT_EQ(parse_preference("accuracy"), (PropertyPreference{{"accuracy"}}));
  EXPECT_EQ(parse_preference("a>b=c"), (PropertyPreference{{"a"}, {"b", "c"}}));
  EXPECT_THROW(parse_preference("a>>b"), Error);
  EXPECT_THROW(parse_preference("a="), Error);
}

}  // namespace
}  // namespace rae::cli

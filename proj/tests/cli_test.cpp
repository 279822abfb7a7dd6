// Copyright 2026 The quasipart Authors
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

#include "quasipart/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "golden_cases.hpp"
#include "json.hpp"

namespace quasipart::cli {
namespace {

using Json = nlohmann::json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Set QUASIPART_UPDATE_GOLDEN=1 to rewrite the expected files.
TEST(CliGoldenTest, MatchesFiles) {
  const std::string dir = QUASIPART_GOLDEN_DIR;
  const bool update = std::getenv("QUASIPART_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : quasipart::testing::load_golden_cases(dir)) {
    const Invocation r = invoke(c.args);
    EXPECT_EQ(r.code, c.exit_code) << c.name << ": " << r.err;
    if (update) {
      std::ofstream(dir + "/" + c.name + ".out", std::ios::binary) << r.out;
      std::ofstream(dir + "/" + c.name + ".err", std::ios::binary) << r.err;
      continue;
    }
    EXPECT_EQ(r.out, quasipart::testing::read_file(dir + "/" + c.name + ".out")) << c.name;
    EXPECT_EQ(r.err, quasipart::testing::read_file(dir + "/" + c.name + ".err")) << c.name;
  }
}

TEST(CliTest, CountFormats) {
  EXPECT_EQ(invoke({"count", "-A", "1,2", "-n", "4", "--format", "plain"}).out, "3\n");
  EXPECT_EQ(invoke({"count", "-A", "3,4", "-n", "0", "--format", "plain"}).out, "1\n");
  EXPECT_EQ(invoke({"count", "-A", "2,4", "-n", "5", "--format", "plain"}).out, "0\n");
  EXPECT_EQ(invoke({"--format", "csv", "count", "-A", "2,4", "-n", "6"}).out,
            "n,p_A_n\r\n6,2\r\n");
}

TEST(CliTest, JsonRoundTrip) {
  const Invocation r = invoke({"count", "-A", "5,3,5", "-n", "1000"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_EQ(j["command"], "count");
  EXPECT_EQ(j["input_echo"]["parts"], Json::array({5, 3, 5}));
  EXPECT_EQ(j["input_echo"]["n"], 1000);
  EXPECT_EQ(j["result"], "67");  // 1000 = 15 * 66 + 10: 66 + p(10)
  EXPECT_TRUE(j["exact"].get<bool>());
  EXPECT_EQ(r.out.back(), '\n');
}

TEST(CliTest, TableLastRow) {
  const Invocation r = invoke({"table", "-A", "1,2,3", "-m", "6", "--format", "csv"});
  EXPECT_NE(r.out.find("6,7\r\n"), std::string::npos);
  const Json j = Json::parse(invoke({"table", "-A", "1", "-m", "3"}).out);
  EXPECT_EQ(j["result"], Json::array({"1", "1", "1", "1"}));
}

TEST(CliTest, QuasipolyPayload) {
  Json j = Json::parse(invoke({"quasipoly", "-A", "2,3"}).out);
  EXPECT_EQ(j["result"]["period"], "6");
  EXPECT_EQ(j["result"]["expected_leading"], "1");
  EXPECT_EQ(j["result"]["constituents"][0]["coefficients"], Json::array({"1", "1"}));
  EXPECT_EQ(j["result"]["constituents"][1]["coefficients"], Json::array({"0", "1"}));
  EXPECT_TRUE(j["result"]["all_match"].get<bool>());

  j = Json::parse(invoke({"quasipoly", "-A", "1"}).out);
  EXPECT_EQ(j["result"]["period"], "1");
  EXPECT_EQ(j["result"]["constituents"][0]["coefficients"], Json::array({"1"}));

  j = Json::parse(invoke({"quasipoly", "-A", "1,2,3"}).out);
  for (const auto& c : j["result"]["constituents"]) {
    EXPECT_EQ(c["leading"], "3");
    EXPECT_EQ(c["degree"], 2);
    EXPECT_TRUE(c["matches"].get<bool>());
  }
}

TEST(CliTest, VerifyExitCodes) {
  EXPECT_EQ(invoke({"verify", "-A", "2,3", "--l-max", "3", "--seed", "0"}).code, kExitOk);
  const Invocation single = invoke({"verify", "-A", "1", "--l-max", "1", "--seed", "0"});
  EXPECT_EQ(single.code, kExitOk);
  EXPECT_EQ(Json::parse(single.out)["result"]["skipped"], 4);
  EXPECT_EQ(invoke({"verify", "-A", "1,2,3", "--l-max", "2", "--seed", "1"}).code, kExitOk);
  EXPECT_EQ(invoke({"verify", "-A", "2,3", "--sertoz-from", "0"}).code,
            kExitIdentityViolation);
}

TEST(CliTest, AsymptotePayload) {
  Json j = Json::parse(invoke({"asymptote", "-A", "1", "-p", "3"}).out);
  for (const auto& p : j["result"]["points"]) EXPECT_EQ(p["ratio"], "1");
  EXPECT_FALSE(j["exact"].get<bool>());

  j = Json::parse(invoke({"asymptote", "-A", "2,3", "-p", "10"}).out);
  EXPECT_EQ(j["result"]["limit_constant"], "1/6");
  EXPECT_EQ(j["result"]["points"].back()["ratio"], "1025/1024");
}

TEST(CliTest, InvalidInput) {
  EXPECT_EQ(invoke({}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"count", "-A", "1,x", "-n", "3"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"count", "-A", "1,2"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"table", "-A", "1,2", "-m", "-1"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"count", "-A", "1", "-n", "1", "--format", "xml"}).code,
            kExitInvalidInput);
  EXPECT_EQ(invoke({"verify", "-A", "2,4"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"asymptote", "-A", "2,4"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"asymptote", "-A", "2,3", "-p", "60"}).code, kExitInvalidInput);
  const Invocation gcd = invoke({"quasipoly", "-A", "2,4"});
  EXPECT_EQ(gcd.code, kExitInvalidInput);
  EXPECT_NE(gcd.err.find("p_{A/g}(n/g)"), std::string::npos);
  EXPECT_TRUE(gcd.out.empty());
}

TEST(CliTest, ResidualExit) {
  const Invocation r = invoke({"quasipoly", "-A", "2,3", "--fit-degree", "0"});
  EXPECT_EQ(r.code, kExitResidual);
  EXPECT_NE(r.err.find("residue 0, l = 1"), std::string::npos);
}

TEST(CliTest, HelpExitsZero) {
  const Invocation r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("quasipoly"), std::string::npos);
}

TEST(CliTest, ThreadsDoNotChangeOutput) {
  const Invocation one = invoke({"quasipoly", "-A", "2,3,5", "--threads", "1"});
  const Invocation four = invoke({"quasipoly", "-A", "2,3,5", "--threads", "4"});
  ASSERT_EQ(one.code, 0);
  Json a = Json::parse(one.out), b = Json::parse(four.out);
  EXPECT_EQ(a["result"], b["result"]);
}

TEST(CsvFieldTest, Quoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("A={2,3} n=4"), "\"A={2,3} n=4\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

}  // namespace
}  // namespace quasipart::cli

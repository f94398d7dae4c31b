// Copyright 2026 The IFCS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const std::string kData = std::string(IFCS_SOURCE_DIR) + "/data/example/";

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    work_ = fs::path(IFCS_WORK_DIR) /
            ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(work_);
    fs::create_directories(work_);
  }

  // Runs the binary with `args`; stdout goes to work_/stdout.
  int Run(const std::string& args) {
    const std::string cmd = std::string(IFCS_BINARY) + " " + args + " > " +
                            (work_ / "stdout").string() + " 2> " +
                            (work_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string Graph() const {
    return "--vertices " + kData + "vertices.tsv --edges " + kData +
           "edges.tsv";
  }

  std::string Query(const std::string& extra) const {
    return "query " + Graph() + " --motif " + kData + "motif.tsv " + extra;
  }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string Stdout() const { return Slurp(work_ / "stdout"); }

  fs::path work_;
};

TEST_F(CliTest, QueryExample) {
  ASSERT_EQ(Run(Query("--mode fva-l --k 2 --no-timing")), 0);
  const auto j = nlohmann::json::parse(Stdout());
  ASSERT_EQ(j["communities"].size(), 1u);
  EXPECT_EQ(j["communities"][0]["members"],
            nlohmann::json::parse(R"(["a8","a9","a10"])"));
  EXPECT_EQ(j["communities"][0]["fairness_score"], 0.0);
  EXPECT_EQ(j["query"]["mode"], "fva-l");
}

TEST_F(CliTest, ModesAgreeOnCommunities) {
  ASSERT_EQ(Run(Query("--mode baseline")), 0);
  const auto base = nlohmann::json::parse(Stdout());
  ASSERT_EQ(Run(Query("--mode fva-l --threads 4")), 0);
  const auto fast = nlohmann::json::parse(Stdout());
  EXPECT_EQ(base["communities"], fast["communities"]);
}

TEST_F(CliTest, OutFileAndMetrics) {
  const fs::path out = work_ / "r.json";
  ASSERT_EQ(Run(Query("--metrics --no-timing --out " + out.string())), 0);
  EXPECT_TRUE(Stdout().empty());
  const auto j = nlohmann::json::parse(Slurp(out));
  EXPECT_EQ(j["metrics"][0]["density"], 1.0);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Run(Query("--k 6")), 1);
  EXPECT_EQ(Run("query " + Graph() + " --motif " + kData + "missing.tsv"), 2);
  EXPECT_EQ(Run(Query("--mode nope")), 2);
  EXPECT_EQ(Run("query --motif x"), 2);
  EXPECT_EQ(Run(Query("--budget 1")), 3);
}

TEST_F(CliTest, GenMotifIsDeterministic) {
  const std::string args =
      "gen-motif " + Graph() + " --size 3 --count 4 --seed 9";
  ASSERT_EQ(Run(args + " --out " + (work_ / "a").string()), 0);
  ASSERT_EQ(Run(args + " --out " + (work_ / "b").string()), 0);
  for (int i = 0; i < 4; ++i) {
    const std::string name = "motif_s3_" + std::to_string(i) + ".tsv";
    const std::string a = Slurp(work_ / "a" / name);
    EXPECT_FALSE(a.empty()) << name;
    EXPECT_EQ(a, Slurp(work_ / "b" / name));
  }
  EXPECT_EQ(Run("gen-motif " + Graph() + " --size 9 --out x"), 2);
}

TEST_F(CliTest, SampleWritesGraph) {
  ASSERT_EQ(
      Run("sample " + Graph() + " --ratio 1.0 --out " + (work_ / "s").string()),
      0);
  EXPECT_EQ(Slurp(work_ / "s" / "vertices.tsv").empty(), false);
  ASSERT_EQ(Run("query --vertices " + (work_ / "s" / "vertices.tsv").string() +
                " --edges " + (work_ / "s" / "edges.tsv").string() +
                " --motif " + kData + "motif.tsv"),
            0);
}

TEST_F(CliTest, BenchCsv) {
  ASSERT_EQ(Run("bench " + Graph() + " --motif " + kData + "motif.tsv"), 0);
  std::istringstream lines(Stdout());
  std::string header, line;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("motif,size,mode,", 0), 0u);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (rows == 1) {
      EXPECT_EQ(line.rfind("motif,3,baseline,", 0), 0u) << line;
    }
  }
  EXPECT_EQ(rows, 8u);  // four modes plus four aggregates
}

}  // namespace

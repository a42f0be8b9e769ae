// Copyright 2026 The Infostat Authors.
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

#include <fstream>

#include <nlohmann/json.hpp>

#include "cli/commands.h"
#include "cli/run_config.h"
#include "infostat/errors.h"
#include "test_util.h"

namespace infostat {
namespace {

using testing::CliPath;
using testing::ReadFile;
using testing::RunCommand;
using testing::TempDir;

std::string Corpus() { return (testing::TestDataDir() / "synthetic.jsonl").string(); }

testing::CommandResult Cli(const std::string& args) { return RunCommand(CliPath() + " " + args); }

// Mention and IS models trained once through the CLI.
class CliPipeline : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir();
    const std::string d = dir_->path().string();
    train_mention_ = Cli("train mention --corpus " + Corpus() + " --out " + d +
                         "/mention --epochs 100 --lr 0.1 --batch-size 64 --max-steps 200");
    train_is_ = Cli("train is --corpus " + Corpus() + " --out " + d +
                    "/is --epochs 100 --lr 0.05 --batch-size 16 --max-steps 300");
  }
  static void TearDownTestSuite() { delete dir_; }
  static std::string D() { return dir_->path().string(); }

  static TempDir* dir_;
  static testing::CommandResult train_mention_;
  static testing::CommandResult train_is_;
};
TempDir* CliPipeline::dir_ = nullptr;
testing::CommandResult CliPipeline::train_mention_;
testing::CommandResult CliPipeline::train_is_;

TEST_F(CliPipeline, TrainWritesRunDirectory) {
  ASSERT_EQ(train_mention_.exit_code, 0) << train_mention_.output;
  ASSERT_EQ(train_is_.exit_code, 0) << train_is_.output;
  for (const char* task : {"mention", "is"}) {
    const auto run = nlohmann::json::parse(ReadFile(dir_->path() / task / "run.json"));
    EXPECT_EQ(run.at("command"), std::string("train ") + task);
    EXPECT_TRUE(run.at("artifacts").contains("model/model.json"));
    const auto config = nlohmann::json::parse(ReadFile(dir_->path() / task / "config.json"));
    EXPECT_EQ(config.at("task"), task);
  }
}

TEST_F(CliPipeline, PredictAndEvaluateGoldMentions) {
  ASSERT_EQ(train_is_.exit_code, 0);
  const auto p = Cli("predict --corpus " + Corpus() + " --is-model " + D() +
                     "/is/model --gold-mentions --out " + D() + "/gold.jsonl");
  ASSERT_EQ(p.exit_code, 0) << p.output;
  const auto e = Cli("evaluate --gold " + Corpus() + " --predictions " + D() +
                     "/gold.jsonl --mode gold --confusion --out " + D() + "/eval_gold");
  ASSERT_EQ(e.exit_code, 0) << e.output;
  const auto report = nlohmann::json::parse(ReadFile(dir_->path() / "eval_gold/report.json"));
  EXPECT_GE(report.at("accuracy").get<double>(), 0.95);
  EXPECT_NE(e.output.find("accuracy"), std::string::npos);
}

TEST_F(CliPipeline, PredictEvaluateAndCompareEndToEnd) {
  ASSERT_EQ(train_mention_.exit_code, 0);
  ASSERT_EQ(train_is_.exit_code, 0);
  const std::string models = " --mention-model " + D() + "/mention/model --is-model " + D() +
                             "/is/model --e2e";
  ASSERT_EQ(Cli("predict --corpus " + Corpus() + models + " --out " + D() + "/a.jsonl").exit_code,
            0);
  ASSERT_EQ(Cli("predict --corpus " + Corpus() + models + " --heuristic --test-max-len 3 --out " +
                D() + "/b.jsonl")
                .exit_code,
            0);
  const auto e = Cli("evaluate --gold " + Corpus() + " --predictions " + D() +
                     "/a.jsonl --buckets");
  ASSERT_EQ(e.exit_code, 0) << e.output;
  EXPECT_NE(e.output.find("overall"), std::string::npos);
  const auto m = Cli("evaluate --gold " + Corpus() + " --predictions " + D() +
                     "/a.jsonl --mode mentions");
  ASSERT_EQ(m.exit_code, 0) << m.output;

  const std::string sig = "significance --gold " + Corpus() + " --pred-a " + D() + "/a.jsonl --pred-b ";
  const auto same = Cli(sig + D() + "/a.jsonl -n 1000 --metric is-e2e-f1");
  ASSERT_EQ(same.exit_code, 0) << same.output;
  EXPECT_NE(same.output.find("p 1 "), std::string::npos) << same.output;
  const auto diff1 = Cli(sig + D() + "/b.jsonl -n 2000 --seed 5");
  const auto diff2 = Cli(sig + D() + "/b.jsonl -n 2000 --seed 5");
  ASSERT_EQ(diff1.exit_code, 0) << diff1.output;
  EXPECT_EQ(diff1.output, diff2.output);
  EXPECT_EQ(Cli(sig + D() + "/b.jsonl -n 10").exit_code, 1);

  const auto br = Cli("bridging bashi --corpus " + Corpus() + " --predictions " + D() +
                      "/a.jsonl --out " + D() + "/br");
  ASSERT_EQ(br.exit_code, 0) << br.output;
  EXPECT_NE(br.output.find("bridging anaphora (bashi)"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir_->path() / "br/anaphors.jsonl"));
  const auto sci = Cli("bridging scicorp --corpus " + Corpus() + " --predictions " + D() +
                       "/a.jsonl");
  ASSERT_EQ(sci.exit_code, 0) << sci.output;
  EXPECT_NE(sci.output.find("WARNING"), std::string::npos);
}

TEST_F(CliPipeline, PredictionFileMustMatchCorpus) {
  ASSERT_EQ(train_is_.exit_code, 0);
  std::ofstream(dir_->path() / "bad.jsonl")
      << R"({"doc_id": "syn00", "sent": 0, "start": 0, "end": 1, "surface": "nope"})" << '\n';
  EXPECT_EQ(Cli("evaluate --gold " + Corpus() + " --predictions " + D() + "/bad.jsonl").exit_code,
            2);
}

TEST(CliTest, UsageAndExitCodes) {
  EXPECT_EQ(Cli("").exit_code, 1);
  EXPECT_EQ(Cli("--help").exit_code, 0);
  EXPECT_EQ(Cli("train bogus --corpus " + Corpus()).exit_code, 1);
  EXPECT_EQ(Cli("stats --corpus /nonexistent.jsonl").exit_code, 2);
  EXPECT_EQ(Cli("train mention --corpus " + Corpus()).exit_code, 1);  // no --out
  EXPECT_EQ(Cli("train mention --corpus " + Corpus() + " --out /tmp/x --lr -1").exit_code, 1);
  EXPECT_EQ(Cli("predict --corpus " + Corpus() + " --out /tmp/x.jsonl").exit_code, 1);
  EXPECT_EQ(Cli("convert scicorp --root /nonexistent --out /tmp/x.jsonl").exit_code, 2);
}

TEST(CliTest, StatsPrintsDistribution) {
  const auto r = Cli("stats --corpus " + Corpus());
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("bridging"), std::string::npos);
}

TEST(CliTest, MalformedCorpusIsDataError) {
  TempDir dir;
  std::ofstream(dir.path() / "c.jsonl") << "{\"doc_id\": 3}\n";
  EXPECT_EQ(Cli("stats --corpus " + (dir.path() / "c.jsonl").string()).exit_code, 2);
}

TEST(CliTest, ConfigErrorsNameTheField) {
  TempDir dir;
  std::ofstream(dir.path() / "a.json") << R"({"mention_train": {"epochs": 0}})";
  auto r = Cli("train mention --corpus " + Corpus() + " --out " + dir.path().string() +
               "/o --config " + (dir.path() / "a.json").string());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("epochs"), std::string::npos) << r.output;
  std::ofstream(dir.path() / "b.json") << R"({"eval": {"foldz": 3}})";
  r = Cli("crossval --corpus " + Corpus() + " --config " + (dir.path() / "b.json").string());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("foldz"), std::string::npos) << r.output;
  std::ofstream(dir.path() / "c.json") << R"({"backend": {"name": "bert"}})";
  r = Cli("crossval --corpus " + Corpus() + " --config " + (dir.path() / "c.json").string());
  EXPECT_EQ(r.exit_code, 1);
}

TEST(CliTest, RunConfigRoundTrips) {
  cli::RunConfig c;
  c.corpus = "/data/c.jsonl";
  c.pipeline.folds = 5;
  c.pipeline.test_max_len = 10;
  c.pipeline.mention_train.learning_rate = 0.25;
  const cli::RunConfig back = cli::ParseRunConfig(cli::ToJson(c), "/");
  EXPECT_EQ(cli::ToJson(back), cli::ToJson(c));
  EXPECT_THROW(cli::ParseRunConfig(nlohmann::json::array(), "/"), ConfigError);
  EXPECT_THROW(cli::ParseRunConfig({{"eval", {{"folds", "ten"}}}}, "/"), ConfigError);
}

TEST(CliTest, CrossvalIsByteIdentical) {
  TempDir dir;
  std::ofstream(dir.path() / "cv.json") << R"({
    "mention_train": {"epochs": 100, "learning_rate": 0.1, "batch_size": 64, "max_steps": 40},
    "is_train": {"epochs": 100, "learning_rate": 0.05, "batch_size": 16, "max_steps": 40},
    "eval": {"folds": 2, "fold_seed": 3}
  })";
  const std::string base = "crossval --corpus " + Corpus() + " --config " +
                           (dir.path() / "cv.json").string() + " --out ";
  const auto a = Cli(base + (dir.path() / "a").string());
  ASSERT_EQ(a.exit_code, 0) << a.output;
  const auto b = Cli(base + (dir.path() / "b").string());
  ASSERT_EQ(b.exit_code, 0) << b.output;
  for (const char* f : {"predictions.jsonl", "report.json", "report.txt",
                        "fold_0/predictions.jsonl", "fold_1/mention/model.json",
                        "fold_1/is/model.json"}) {
    EXPECT_EQ(ReadFile(dir.path() / "a" / f), ReadFile(dir.path() / "b" / f)) << f;
  }
  const auto run = nlohmann::json::parse(ReadFile(dir.path() / "a/run.json"));
  EXPECT_EQ(run.at("seeds").at("fold_seed"), 3);
  // config.json records out_dir, so only the other artifacts must agree.
  auto artifacts_a = run.at("artifacts");
  auto artifacts_b = nlohmann::json::parse(ReadFile(dir.path() / "b/run.json")).at("artifacts");
  artifacts_a.erase("config.json");
  artifacts_b.erase("config.json");
  EXPECT_EQ(artifacts_a, artifacts_b);
}

TEST(CliTest, ExitCodeMapping) {
  EXPECT_EQ(cli::ExitCode(ConfigError("x")), 1);
  EXPECT_EQ(cli::ExitCode(DataError("x")), 2);
  EXPECT_EQ(cli::ExitCode(SpanTooLongError("x")), 2);
  EXPECT_EQ(cli::ExitCode(std::runtime_error("x")), 3);
}

}  // namespace
}  // namespace infostat

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

#include "infostat/encoder.h"
#include "infostat/errors.h"
#include "infostat/spangen.h"
#include "test_util.h"

namespace infostat {
namespace {

using testing::RunCommand;
using testing::TempDir;

// A one-layer BERT with a character wordpiece vocabulary, written locally.
constexpr char kMakeTinyModel[] = R"(
import string, sys
from transformers import BertConfig, BertModel, BertTokenizerFast
out = sys.argv[1]
vocab = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"] + list(string.ascii_lowercase + ".,")
vocab += ["##" + c for c in string.ascii_lowercase]
open(out + "/vocab.txt", "w").write("\n".join(vocab) + "\n")
tok = BertTokenizerFast(out + "/vocab.txt", do_lower_case=True)
cfg = BertConfig(vocab_size=len(vocab), hidden_size=16, num_hidden_layers=1,
                 num_attention_heads=2, intermediate_size=32, max_position_embeddings=256)
BertModel(cfg).save_pretrained(out + "/model")
tok.save_pretrained(out + "/model")
)";

class TransformerServerTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    if (RunCommand("python3 -c 'import torch, transformers'").exit_code != 0) return;
    dir_ = new TempDir();
    std::ofstream(dir_->path() / "make.py") << kMakeTinyModel;
    const auto r = RunCommand("python3 " + (dir_->path() / "make.py").string() + " " +
                              dir_->path().string());
    ready_ = r.exit_code == 0;
    if (!ready_) std::cerr << r.output;
  }
  static void TearDownTestSuite() { delete dir_; }
  void SetUp() override {
    if (!ready_) GTEST_SKIP() << "python3 with torch and transformers is not available";
  }
  static BackendSpec Spec() {
    BackendSpec spec;
    spec.name = kPretrainedBackend;
    spec.model = (dir_->path() / "model").string();
    spec.server_command = std::string("python3 ") + INFOSTAT_PYTHON_SERVER_PATH;
    spec.max_seq_len = 128;
    return WithSpecialTokens(spec, SpanGenConfig{});
  }
  static TempDir* dir_;
  static bool ready_;
};
TempDir* TransformerServerTest::dir_ = nullptr;
bool TransformerServerTest::ready_ = false;

TEST_F(TransformerServerTest, MarkersCostOnePositionEach) {
  const auto backend = CreateBackend(Spec());
  EXPECT_EQ(backend->hidden_dim(), 16);
  const SpanGenConfig config;
  const MarkedSequence m = InsertMarkers(std::vector<std::string>{"the", "cat"}, 1, 1, config);
  // [CLS] t ##h ##e [SEP1] c ##a ##t [SEP2] [SEP]
  EXPECT_EQ(backend->EncodedLength(m), 10);
  const auto states = backend->EncodeBatch(std::span(&m, 1));
  ASSERT_EQ(states.size(), 1u);
  EXPECT_EQ(states[0].open.size(), 16u);
  EXPECT_NE(states[0].open, states[0].close);
  const MarkedSequence long_input =
      InsertMarkers(std::vector<std::string>(200, "cat"), 0, 0, config);
  EXPECT_THROW(backend->EncodeBatch(std::span(&long_input, 1)), SpanTooLongError);
}

TEST_F(TransformerServerTest, CliTrainsAndPredictsThroughServer) {
  const std::string corpus = (testing::TestDataDir() / "synthetic.jsonl").string();
  const std::string run = (dir_->path() / "run").string();
  const auto train = RunCommand(
      testing::CliPath() + " train mention --corpus " + corpus + " --out " + run +
      " --backend pretrained_contextual --model " + (dir_->path() / "model").string() +
      " --server-command 'python3 " + INFOSTAT_PYTHON_SERVER_PATH +
      "' --max-seq-len 128 --max-steps 2 --batch-size 32 --lr 0.001");
  ASSERT_EQ(train.exit_code, 0) << train.output;
  EXPECT_TRUE(std::filesystem::exists(dir_->path() / "run/model/backend/encoder/config.json"));
  const auto predict = RunCommand(testing::CliPath() + " predict --corpus " + corpus +
                                  " --mention-model " + run + "/model --e2e --out " + run +
                                  "/pred.jsonl");
  EXPECT_EQ(predict.exit_code, 0) << predict.output;
}

}  // namespace
}  // namespace infostat

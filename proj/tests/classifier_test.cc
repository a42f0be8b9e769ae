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

#include <cmath>
#include <numeric>

#include "infostat/classifier.h"
#include "infostat/errors.h"
#include "infostat/reference_encoder.h"
#include "test_util.h"

namespace infostat {
namespace {

using testing::TempDir;

TEST(SoftmaxTest, NormalizedAndStable) {
  const Vector p = Softmax({1000.0, 1000.0, -1000.0});
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[1], 0.5, 1e-12);
  EXPECT_NEAR(p[2], 0.0, 1e-12);
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    Vector logits(8);
    for (double& v : logits) v = 40.0 * (rng.UniformDouble() - 0.5);
    const Vector q = Softmax(logits);
    EXPECT_NEAR(std::accumulate(q.begin(), q.end(), 0.0), 1.0, 1e-9);
  }
}

TEST(ArgmaxTest, TiesGoLow) {
  EXPECT_EQ(Argmax({0.1, 0.7, 0.7, 0.2}), 1);
  EXPECT_EQ(Argmax({3.0}), 0);
  EXPECT_EQ(Argmax({2.0, 2.0, 2.0}), 0);
}

TEST(ArgmaxTest, PositiveScalingInvariant) {
  Rng rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    Vector logits(8);
    for (double& v : logits) v = rng.UniformDouble() - 0.5;
    const double c = 1e-3 + 1e3 * rng.UniformDouble();
    Vector scaled = logits;
    for (double& v : scaled) v *= c;
    EXPECT_EQ(Argmax(logits), Argmax(scaled));
    EXPECT_EQ(Argmax(Softmax(logits)), Argmax(logits));
  }
}

TEST(TrainConfigTest, Validate) {
  EXPECT_NO_THROW(TrainConfig{}.Validate());
  const auto mention = DefaultMentionTrainConfig();
  EXPECT_EQ(mention.epochs, 1);
  EXPECT_DOUBLE_EQ(mention.learning_rate, 1e-5);
  EXPECT_EQ(mention.batch_size, 32);
  const auto is = DefaultIsTrainConfig();
  EXPECT_EQ(is.epochs, 3);
  EXPECT_DOUBLE_EQ(is.learning_rate, 3e-5);
  TrainConfig c;
  c.epochs = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.learning_rate = 0.0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.batch_size = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.max_steps = -1;
  EXPECT_THROW(c.Validate(), ConfigError);
}

double CrossEntropy(const LinearHead& head, const BoundaryStates& s, int label) {
  return -std::log(Softmax(head.Logits(s))[label]);
}

// Central finite differences against LinearHead::Backward.
TEST(LinearHeadTest, BackwardMatchesFiniteDifferences) {
  Rng rng(3);
  LinearHead head(6, 4, 7);
  BoundaryStates s{Vector(3), Vector(3)};
  for (double& v : s.open) v = rng.UniformDouble() - 0.5;
  for (double& v : s.close) v = rng.UniformDouble() - 0.5;
  const int label = 2;
  Vector grad_logits = Softmax(head.Logits(s));
  grad_logits[label] -= 1.0;
  std::vector<double> gw(head.weights().size()), gb(head.bias().size());
  const BoundaryStates gs = head.Backward(s, grad_logits, gw, gb);

  const double h = 1e-6;
  for (size_t i = 0; i < gw.size(); ++i) {
    auto w = head.weights();
    LinearHead plus = head, minus = head;
    w[i] += h;
    plus.SetParameters(w, head.bias());
    w[i] -= 2 * h;
    minus.SetParameters(w, head.bias());
    EXPECT_NEAR(gw[i], (CrossEntropy(plus, s, label) - CrossEntropy(minus, s, label)) / (2 * h),
                1e-6);
  }
  for (size_t i = 0; i < 3; ++i) {
    BoundaryStates p = s, m = s;
    p.open[i] += h;
    m.open[i] -= h;
    EXPECT_NEAR(gs.open[i], (CrossEntropy(head, p, label) - CrossEntropy(head, m, label)) / (2 * h),
                1e-6);
    p = s;
    m = s;
    p.close[i] += h;
    m.close[i] -= h;
    EXPECT_NEAR(gs.close[i],
                (CrossEntropy(head, p, label) - CrossEntropy(head, m, label)) / (2 * h), 1e-6);
  }
  for (double g : gb) EXPECT_TRUE(std::isfinite(g));
}

TEST(LinearHeadTest, ShapeChecks) {
  LinearHead head(4, 2, 1);
  EXPECT_THROW(head.Logits({Vector(3), Vector(3)}), DataError);
  EXPECT_THROW(head.SetParameters(Vector(3), Vector(2)), DataError);
}

std::vector<MarkedSequence> ToyInputs(std::vector<int>& labels) {
  const SpanGenConfig config;
  std::vector<MarkedSequence> out;
  const std::vector<std::string> a = {"the", "red", "cat", "sat"};
  const std::vector<std::string> b = {"a", "plant", "of", "it"};
  for (int i = 0; i < 4; ++i) {
    out.push_back(InsertMarkers(a, i, i, config));
    labels.push_back(i % 2);
    out.push_back(InsertMarkers(b, i, i, config));
    labels.push_back((i + 1) % 2);
  }
  return out;
}

TEST(TrainClassifierTest, FitsToyProblemDeterministically) {
  std::vector<int> labels;
  const auto inputs = ToyInputs(labels);
  TrainConfig config;
  config.epochs = 60;
  config.learning_rate = 0.05;
  config.batch_size = 4;
  auto run = [&](std::vector<double>* weights) {
    BackendSpec spec;
    spec.hidden_dim = 8;
    ReferenceEncoder enc(spec);
    LinearHead head(16, 2, config.seed);
    const TrainingLog log = TrainClassifier(
        enc, head, inputs.size(), [&](size_t i) { return inputs[i]; }, labels, config);
    *weights = head.weights();
    int correct = 0;
    const auto probs = ClassProbabilities(enc, head, inputs, 3);
    for (size_t i = 0; i < inputs.size(); ++i) correct += Argmax(probs[i]) == labels[i];
    EXPECT_EQ(log.loss.size(), 120u);
    EXPECT_LT(log.loss.back(), log.loss.front());
    EXPECT_DOUBLE_EQ(log.learning_rate.front(), 0.05);
    return correct;
  };
  std::vector<double> w1, w2;
  EXPECT_EQ(run(&w1), static_cast<int>(inputs.size()));
  run(&w2);
  EXPECT_EQ(w1, w2);
}

TEST(TrainClassifierTest, MaxStepsCapsAndLabelsChecked) {
  std::vector<int> labels;
  const auto inputs = ToyInputs(labels);
  TrainConfig config;
  config.epochs = 10;
  config.batch_size = 3;
  config.max_steps = 5;
  ReferenceEncoder enc(BackendSpec{});
  LinearHead head(64, 2, 1);
  const auto input = [&](size_t i) { return inputs[i]; };
  EXPECT_EQ(TrainClassifier(enc, head, inputs.size(), input, labels, config).loss.size(), 5u);
  labels.pop_back();
  EXPECT_THROW(TrainClassifier(enc, head, inputs.size(), input, labels, config), Error);
}

TEST(TrainingLogTest, RoundTrip) {
  TrainingLog log{{0.5, 0.25, 0.125}, {1e-5, 5e-6, 0.0}};
  TempDir dir;
  WriteTrainingLog(log, dir.path() / "log.tsv");
  const TrainingLog back = ReadTrainingLog(dir.path() / "log.tsv");
  EXPECT_EQ(back.loss, log.loss);
  EXPECT_EQ(back.learning_rate, log.learning_rate);
  EXPECT_THROW(ReadTrainingLog(dir.path() / "missing.tsv"), DataError);
}

}  // namespace
}  // namespace infostat

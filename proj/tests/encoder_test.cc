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
#include <cstdlib>

#include "infostat/encoder.h"
#include "infostat/errors.h"
#include "infostat/reference_encoder.h"
#include "infostat/subprocess_encoder.h"
#include "test_util.h"

namespace infostat {
namespace {

using testing::RandomWords;
using testing::TempDir;

std::vector<MarkedSequence> RandomInputs(Rng& rng, int count) {
  const SpanGenConfig config;
  std::vector<MarkedSequence> out;
  for (int i = 0; i < count; ++i) {
    const auto w = RandomWords(rng, 1 + static_cast<int>(rng.UniformIndex(12)));
    const int n = static_cast<int>(w.size());
    const int start = static_cast<int>(rng.UniformIndex(n));
    const int end = start + static_cast<int>(rng.UniformIndex(n - start));
    out.push_back(rng.Coin() ? InsertMarkers(w, start, end, config)
                             : BuildIsInput(w, {"d", 0, start, end, {}, {}, {}},
                                            rng.Coin(), config));
  }
  return out;
}

double Dot(const BoundaryStates& a, const BoundaryStates& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.open.size(); ++i) s += a.open[i] * b.open[i];
  for (size_t i = 0; i < a.close.size(); ++i) s += a.close[i] * b.close[i];
  return s;
}

TEST(SpanRepresentationTest, Concatenates) {
  EXPECT_EQ(MakeSpanRepresentation({1, 2}, {3, 4}).vector, (Vector{1, 2, 3, 4}));
  EXPECT_EQ(MakeSpanRepresentation({0, 0}, {0, 0}).vector, Vector(4, 0.0));
  EXPECT_EQ(MakeSpanRepresentation(Vector(1024), Vector(1024)).vector.size(), 2048u);
  EXPECT_THROW(MakeSpanRepresentation({1}, {1, 2}), DataError);
}

TEST(BackendFactoryTest, NamesAndOptions) {
  BackendSpec spec;
  EXPECT_EQ(CreateBackend(spec)->name(), kReferenceBackend);
  spec.name = "bogus";
  EXPECT_THROW(CreateBackend(spec), ConfigError);
  spec = {};
  spec.embed_dim = 0;
  EXPECT_THROW(CreateBackend(spec), ConfigError);
  spec = {};
  spec.max_seq_len = 4;
  EXPECT_THROW(CreateBackend(spec), ConfigError);
  TempDir dir;
  EXPECT_THROW(LoadBackend(dir.path()), DataError);
}

TEST(ReferenceEncoderTest, DeterministicAndDimensioned) {
  Rng rng(1);
  const auto inputs = RandomInputs(rng, 50);
  const ReferenceEncoder a(BackendSpec{});
  const ReferenceEncoder b(BackendSpec{});
  const auto sa = a.EncodeBatch(inputs);
  EXPECT_EQ(sa, b.EncodeBatch(inputs));
  EXPECT_EQ(sa, a.EncodeBatch(inputs));
  for (const auto& s : sa) {
    ASSERT_EQ(s.open.size(), 32u);
    ASSERT_EQ(MakeSpanRepresentation(s.open, s.close).vector.size(), 64u);
    for (double v : s.open) EXPECT_TRUE(std::isfinite(v));
  }
  BackendSpec other;
  other.seed = 99;
  EXPECT_NE(ReferenceEncoder(other).EncodeBatch(inputs), sa);
}

TEST(ReferenceEncoderTest, BatchingInvariance) {
  Rng rng(2);
  const auto inputs = RandomInputs(rng, 32);
  const ReferenceEncoder enc(BackendSpec{});
  const auto batched = enc.EncodeBatch(inputs);
  for (size_t i = 0; i < inputs.size(); ++i) {
    const auto single = enc.EncodeBatch(std::span(&inputs[i], 1));
    for (size_t k = 0; k < single[0].open.size(); ++k) {
      EXPECT_NEAR(single[0].open[k], batched[i].open[k], 1e-5);
      EXPECT_NEAR(single[0].close[k], batched[i].close[k], 1e-5);
    }
  }
}

TEST(ReferenceEncoderTest, MarkerPositionChangesRepresentation) {
  Rng rng(3);
  const ReferenceEncoder enc(BackendSpec{});
  const SpanGenConfig config;
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = RandomWords(rng, 2 + static_cast<int>(rng.UniformIndex(10)));
    const int n = static_cast<int>(w.size());
    const int s1 = static_cast<int>(rng.UniformIndex(n));
    const int e1 = s1 + static_cast<int>(rng.UniformIndex(n - s1));
    int s2 = static_cast<int>(rng.UniformIndex(n));
    int e2 = s2 + static_cast<int>(rng.UniformIndex(n - s2));
    if (s1 == s2 && e1 == e2) continue;
    const MarkedSequence a = InsertMarkers(w, s1, e1, config);
    const MarkedSequence b = InsertMarkers(w, s2, e2, config);
    const auto sa = enc.EncodeBatch(std::span(&a, 1))[0];
    const auto sb = enc.EncodeBatch(std::span(&b, 1))[0];
    EXPECT_NE(MakeSpanRepresentation(sa.open, sa.close).vector,
              MakeSpanRepresentation(sb.open, sb.close).vector);
  }
}

TEST(ReferenceEncoderTest, EncodedLengthCountsMarkersOnce) {
  const ReferenceEncoder enc(BackendSpec{});
  const SpanGenConfig config;
  // 2 delimiters + 2 markers + "a" + "abcdefghijkl" (2 units)
  const MarkedSequence m =
      InsertMarkers(std::vector<std::string>{"a", "abcdefghijkl"}, 1, 1, config);
  EXPECT_EQ(enc.EncodedLength(m), 7);
  const MarkedSequence is =
      BuildIsInput(std::vector<std::string>{"a"}, {"d", 0, 0, 0, {}, {}, {}}, true, config);
  EXPECT_EQ(enc.EncodedLength(is), 2 + 2 + 1 + 1 + 1);
}

TEST(ReferenceEncoderTest, OverBudgetRejected) {
  BackendSpec spec;
  spec.max_seq_len = 8;
  const ReferenceEncoder enc(spec);
  const MarkedSequence m = InsertMarkers(std::vector<std::string>(10, "w"), 0, 0, SpanGenConfig{});
  EXPECT_THROW(enc.EncodeBatch(std::span(&m, 1)), SpanTooLongError);
}

// Gradients g_i make TrainStep descend sum_i <g_i, h_i>; one small step
// must lower it if the analytic gradient points the right way.
TEST(ReferenceEncoderTest, TrainStepDescendsLinearObjective) {
  Rng rng(4);
  const auto inputs = RandomInputs(rng, 16);
  ReferenceEncoder enc(BackendSpec{});
  std::vector<BoundaryStates> grads;
  for (size_t i = 0; i < inputs.size(); ++i) {
    BoundaryStates g{Vector(32), Vector(32)};
    for (double& v : g.open) v = rng.UniformDouble() - 0.5;
    for (double& v : g.close) v = rng.UniformDouble() - 0.5;
    grads.push_back(g);
  }
  auto objective = [&]() {
    const auto states = enc.EncodeBatch(inputs);
    double total = 0.0;
    for (size_t i = 0; i < states.size(); ++i) total += Dot(states[i], grads[i]);
    return total;
  };
  const double before = objective();
  const uint64_t fp = enc.Fingerprint();
  enc.TrainStep(inputs, grads, 1e-3);
  EXPECT_LT(objective(), before);
  EXPECT_NE(enc.Fingerprint(), fp);
  EXPECT_THROW(enc.TrainStep(inputs, std::span(grads).first(3), 1e-3), Error);
}

TEST(ReferenceEncoderTest, SaveLoadRoundTrip) {
  Rng rng(5);
  const auto inputs = RandomInputs(rng, 10);
  BackendSpec spec;
  spec.hidden_dim = 8;
  spec.special_tokens = {"[SEP1]", "[SEP2]", "[SEP]"};
  ReferenceEncoder enc(spec);
  std::vector<BoundaryStates> grads(inputs.size(), {Vector(8, 0.1), Vector(8, -0.2)});
  enc.TrainStep(inputs, grads, 0.01);
  TempDir dir;
  enc.Save(dir.path());
  const auto loaded = LoadBackend(dir.path());
  EXPECT_EQ(loaded->name(), kReferenceBackend);
  EXPECT_EQ(loaded->hidden_dim(), 8);
  EXPECT_EQ(loaded->Fingerprint(), enc.Fingerprint());
  EXPECT_EQ(loaded->EncodeBatch(inputs), enc.EncodeBatch(inputs));
}

class SubprocessEncoderTest : public ::testing::Test {
 protected:
  BackendSpec Spec() const {
    BackendSpec spec;
    spec.name = kPretrainedBackend;
    spec.model = "reference";
    spec.server_command = testing::EncoderServerPath();
    spec.special_tokens = {"[SEP1]", "[SEP2]", "[SEP]"};
    return spec;
  }
};

// The bundled server hosts the reference encoder, so the subprocess backend
// must reproduce it exactly.
TEST_F(SubprocessEncoderTest, MatchesInProcessReference) {
  Rng rng(6);
  const auto inputs = RandomInputs(rng, 20);
  const auto remote = CreateBackend(Spec());
  BackendSpec local_spec = Spec();
  local_spec.name = kReferenceBackend;
  ReferenceEncoder local(local_spec);
  EXPECT_EQ(remote->name(), kPretrainedBackend);
  EXPECT_EQ(remote->hidden_dim(), local.hidden_dim());
  EXPECT_TRUE(remote->supports_training());
  EXPECT_EQ(remote->Fingerprint(), local.Fingerprint());
  for (const auto& m : inputs) EXPECT_EQ(remote->EncodedLength(m), local.EncodedLength(m));
  const auto rs = remote->EncodeBatch(inputs);
  const auto ls = local.EncodeBatch(inputs);
  ASSERT_EQ(rs.size(), ls.size());
  for (size_t i = 0; i < rs.size(); ++i) {
    for (size_t k = 0; k < rs[i].open.size(); ++k) {
      EXPECT_NEAR(rs[i].open[k], ls[i].open[k], 1e-12);
      EXPECT_NEAR(rs[i].close[k], ls[i].close[k], 1e-12);
    }
  }
}

TEST_F(SubprocessEncoderTest, TrainSaveLoad) {
  Rng rng(7);
  const auto inputs = RandomInputs(rng, 6);
  auto remote = CreateBackend(Spec());
  std::vector<BoundaryStates> grads(inputs.size(),
                                    {Vector(32, 0.05), Vector(32, -0.05)});
  const uint64_t before = remote->Fingerprint();
  remote->TrainStep(inputs, grads, 0.01);
  EXPECT_NE(remote->Fingerprint(), before);
  TempDir dir;
  remote->Save(dir.path());
  const auto loaded = LoadBackend(dir.path());
  EXPECT_EQ(loaded->name(), kPretrainedBackend);
  EXPECT_EQ(loaded->Fingerprint(), remote->Fingerprint());
  EXPECT_EQ(loaded->EncodeBatch(inputs).size(), inputs.size());
}

TEST_F(SubprocessEncoderTest, TooLongIsReportedAsSpanTooLong) {
  BackendSpec spec = Spec();
  spec.max_seq_len = 8;
  const auto remote = CreateBackend(spec);
  const MarkedSequence m = InsertMarkers(std::vector<std::string>(10, "w"), 0, 0, SpanGenConfig{});
  EXPECT_THROW(remote->EncodeBatch(std::span(&m, 1)), SpanTooLongError);
}

TEST_F(SubprocessEncoderTest, MissingServerCommand) {
  BackendSpec spec = Spec();
  spec.server_command.clear();
  unsetenv("INFOSTAT_ENCODER_SERVER");
  EXPECT_THROW(CreateBackend(spec), ConfigError);
  spec.server_command = "/nonexistent/encoder-server";
  EXPECT_THROW(CreateBackend(spec), Error);
}

}  // namespace
}  // namespace infostat

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

#include "infostat/bridging.h"
#include "infostat/errors.h"
#include "test_util.h"

namespace infostat {
namespace {

Corpus OneDoc() {
  Document d;
  d.doc_id = "d";
  d.sentences = {MakeSentence("d", 0, {"The", "roof", "of", "his", "house", "leaked"}),
                 MakeSentence("d", 1, {"Their", "owner", "saw", "this", "damage"})};
  return {d};
}

Mention M(int sent, int start, int end, std::optional<ISCategory> cat) {
  return {"d", sent, start, end, cat, {}, {}};
}

TEST(BashiAnaphorsTest, KeepsBridgingAndComparativeInOrder) {
  const Corpus corpus = OneDoc();
  const std::vector<Mention> pred = {M(0, 0, 1, ISCategory::kMediatedComparative),
                                     M(0, 3, 4, ISCategory::kOld),
                                     M(1, 0, 1, ISCategory::kMediatedBridging),
                                     M(1, 3, 4, ISCategory::kNew)};
  const auto out = BashiAnaphors(pred, corpus);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].mention, pred[0]);
  EXPECT_EQ(out[0].source_category, ISCategory::kMediatedComparative);
  EXPECT_EQ(out[1].source_category, ISCategory::kMediatedBridging);
  EXPECT_THROW(BashiAnaphors(std::vector<Mention>{M(0, 0, 0, std::nullopt)}, corpus),
               DataError);
  EXPECT_THROW(BashiAnaphors(std::vector<Mention>{M(4, 0, 0, ISCategory::kMediatedBridging)},
                             corpus),
               DataError);
}

TEST(ScicorpAnaphorsTest, DeterminerFilter) {
  const Corpus corpus = OneDoc();
  const std::vector<Mention> pred = {M(0, 0, 1, ISCategory::kMediatedBridging),
                                     M(0, 3, 4, ISCategory::kMediatedBridging),
                                     M(1, 3, 4, ISCategory::kMediatedBridging),
                                     M(1, 4, 4, ISCategory::kMediatedComparative)};
  const auto out = ScicorpAnaphors(pred, corpus, DefaultDeterminers());
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].mention, pred[0]);
  EXPECT_EQ(out[1].mention, pred[2]);
  EXPECT_THROW(ScicorpAnaphors(pred, corpus, {}), ConfigError);
  EXPECT_EQ(ScicorpAnaphors(pred, corpus, {"his"}).size(), 1u);
}

// Scicorp output is always a subset of the mediated/bridging predictions and
// Bashi output is exactly the bridging and comparative ones.
TEST(AnaphorFilterTest, RandomSubsetProperties) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    Corpus corpus;
    std::vector<Mention> pred;
    for (int d = 0; d < 3; ++d) {
      corpus.push_back(testing::RandomDocument(rng, "doc" + std::to_string(d)));
      pred.insert(pred.end(), corpus.back().gold_mentions.begin(),
                  corpus.back().gold_mentions.end());
    }
    const auto bashi = BashiAnaphors(pred, corpus);
    const auto sci = ScicorpAnaphors(pred, corpus, DefaultDeterminers());
    size_t expected_bashi = 0;
    for (const Mention& m : pred) {
      expected_bashi += m.is_category == ISCategory::kMediatedBridging ||
                        m.is_category == ISCategory::kMediatedComparative;
    }
    EXPECT_EQ(bashi.size(), expected_bashi);
    for (const auto& a : sci) {
      EXPECT_EQ(a.mention.is_category, ISCategory::kMediatedBridging);
      const Document& doc = *std::find_if(corpus.begin(), corpus.end(), [&](const Document& x) {
        return x.doc_id == a.mention.doc_id;
      });
      EXPECT_TRUE(DefaultDeterminers().count(
          AsciiLower(doc.sentences[a.mention.sent_index].tokens[a.mention.start].text)));
    }
  }
}

TEST(LoadDeterminersTest, ReadsLexiconFile) {
  testing::TempDir dir;
  std::ofstream(dir.path() / "det.txt") << "# comment\nThe\nsuch\n\n";
  EXPECT_EQ(LoadDeterminers(dir.path() / "det.txt"), (std::set<std::string>{"the", "such"}));
}

TEST(ContainingInferrableTest, TagsTakePrecedence) {
  const Corpus corpus = OneDoc();
  std::vector<Mention> gold = {M(0, 0, 1, std::nullopt), M(0, 3, 4, std::nullopt),
                               M(1, 0, 1, std::nullopt)};
  gold[0].subtype = kContainingInferrable;
  gold[2].subtype = "plain";
  int warnings = 0;
  const auto out = FilterContainingInferrable(gold, corpus, [&](const std::string&) {
    ++warnings;
  });
  EXPECT_EQ(out, (std::vector<Mention>{gold[1], gold[2]}));
  EXPECT_EQ(warnings, 0);
}

TEST(ContainingInferrableTest, PossessiveFallbackWarns) {
  const Corpus corpus = OneDoc();
  const std::vector<Mention> gold = {M(0, 0, 1, std::nullopt), M(0, 3, 4, std::nullopt),
                                     M(1, 0, 1, std::nullopt)};
  std::string warning;
  const auto out =
      FilterContainingInferrable(gold, corpus, [&](const std::string& w) { warning = w; });
  EXPECT_EQ(out, (std::vector<Mention>{gold[0]}));
  EXPECT_NE(warning.find("2 of 3"), std::string::npos);
  EXPECT_TRUE(FilterContainingInferrable({}, corpus, {}).empty());
}

TEST(EvalBridgingTest, ExactMatchIgnoresCategory) {
  const std::vector<Mention> gold = {M(0, 0, 1, std::nullopt), M(1, 3, 4, std::nullopt)};
  const std::vector<AnaphorPrediction> pred = {
      {M(0, 0, 1, ISCategory::kMediatedComparative), ISCategory::kMediatedComparative},
      {M(1, 3, 3, ISCategory::kMediatedBridging), ISCategory::kMediatedBridging}};
  const PRF p = EvalBridging(gold, pred);
  EXPECT_EQ(p.correct_count, 1);
  EXPECT_DOUBLE_EQ(p.f1, 0.5);
  EXPECT_EQ(AnaphorMentions(pred).size(), 2u);
  EXPECT_EQ(EvalBridging({}, {}).f1, 0.0);
}

}  // namespace
}  // namespace infostat

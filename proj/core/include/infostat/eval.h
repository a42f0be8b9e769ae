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

#ifndef INFOSTAT_EVAL_H_
#define INFOSTAT_EVAL_H_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "infostat/document.h"

namespace infostat {

struct PRF {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  long long gold_count = 0;
  long long pred_count = 0;
  long long correct_count = 0;

  static PRF FromCounts(long long gold, long long pred, long long correct);
  bool operator==(const PRF&) const = default;
};

// 2PR/(P+R), or 0 when P+R is 0.
double F1(double precision, double recall);

struct BucketResult {
  PRF prf;
  // Share of gold mentions in this bucket.
  double frequency = 0.0;
};

using ConfusionMatrix =
    std::array<std::array<long long, kNumCategories>, kNumCategories>;

struct MetricReport {
  std::optional<PRF> mention_prf;
  std::map<ISCategory, PRF> per_class;
  std::optional<double> accuracy;
  std::optional<PRF> overall;
  // confusion[gold][predicted] over boundary-matched pairs.
  ConfusionMatrix confusion{};
  // Keyed by LengthBucket index.
  std::map<int, BucketResult> length_buckets;
};

// Exact-boundary mention scoring; labels are ignored. Throws DataError on a
// duplicate span in either list.
PRF EvalMentions(std::span<const Mention> gold, std::span<const Mention> pred);

// Gold-mention setting: pred must label exactly the gold spans. Fills
// per_class, accuracy and confusion. Throws DataError on a span mismatch,
// duplicate or missing label.
MetricReport EvalIsGold(std::span<const Mention> gold, std::span<const Mention> pred);

// End-to-end setting: a prediction is correct iff its boundaries and label
// both match a gold mention. Fills mention_prf, per_class, overall (micro)
// and confusion.
MetricReport EvalIsE2e(std::span<const Mention> gold, std::span<const Mention> pred);

// Exact-match PRF per length bucket (1..10, 11+) for every bucket.
std::map<int, BucketResult> LengthBucketReport(std::span<const Mention> gold,
                                               std::span<const Mention> pred);

// Per-document mention lists, keyed by doc_id. Documents without mentions
// are present with an empty list.
using DocMentions = std::map<std::string, std::vector<Mention>>;

// Groups mentions under the given documents; throws DataError for a
// mention of any other document.
DocMentions GroupByDocument(std::span<const Mention> mentions,
                            std::span<const std::string> doc_ids);

// A corpus metric built from additive per-document counts.
struct Scorer {
  std::string name;
  std::function<std::vector<long long>(std::span<const Mention> gold,
                                       std::span<const Mention> pred)>
      counts;
  std::function<double(const std::vector<long long>&)> value;
};

// mention-f1, is-e2e-f1, is-accuracy, bridging-f1. Throws ConfigError for
// other names.
Scorer NamedScorer(const std::string& name);
std::vector<std::string> ScorerNames();

double ScoreDocuments(const Scorer& scorer, const DocMentions& gold,
                      const DocMentions& pred);

// Paired approximate randomization over documents, two-sided, with the
// observed assignment counted once: p = (hits + 1) / (n_shuffles + 1).
// Throws DataError if the three inputs cover different documents and
// ConfigError if n_shuffles < 1.
double RandomizationTest(const DocMentions& gold, const DocMentions& pred_a,
                         const DocMentions& pred_b, const Scorer& scorer,
                         long long n_shuffles, uint64_t seed);

// Share of all 2^d swap assignments whose absolute difference reaches the
// observed one. Throws ConfigError for more than 24 documents.
double ExactRandomizationTest(const DocMentions& gold, const DocMentions& pred_a,
                              const DocMentions& pred_b, const Scorer& scorer);

// Plain-text tables.
std::string FormatReport(const MetricReport& report, bool with_buckets,
                         bool with_confusion);
nlohmann::json ToJson(const PRF& prf);
nlohmann::json ToJson(const MetricReport& report);

}  // namespace infostat

#endif  // INFOSTAT_EVAL_H_

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

#include <iomanip>
#include <ostream>

#include "infostat/corpus.h"
#include "infostat/errors.h"
#include "infostat/rng.h"

namespace infostat {

std::vector<FoldSplit> MakeFolds(const Corpus& corpus, int k, uint64_t seed) {
  if (k < 2) throw ConfigError("fold count k must be >= 2, got " + std::to_string(k));
  if (k > static_cast<int>(corpus.size())) {
    throw ConfigError("fold count k=" + std::to_string(k) + " exceeds document count " +
                      std::to_string(corpus.size()));
  }
  std::vector<std::string> ids;
  std::set<std::string> all;
  for (const Document& d : corpus) {
    if (!all.insert(d.doc_id).second) {
      throw DataError("duplicate doc_id " + d.doc_id);
    }
    ids.push_back(d.doc_id);
  }
  Rng rng(seed);
  rng.Shuffle(ids);

  std::vector<FoldSplit> folds(k);
  for (int f = 0; f < k; ++f) folds[f].fold_id = f;
  for (size_t i = 0; i < ids.size(); ++i) folds[i % k].test_doc_ids.insert(ids[i]);
  for (FoldSplit& fold : folds) {
    for (const std::string& id : all) {
      if (!fold.test_doc_ids.count(id)) fold.train_doc_ids.insert(id);
    }
  }
  return folds;
}

Corpus SelectDocuments(const Corpus& corpus, const std::set<std::string>& doc_ids) {
  Corpus out;
  for (const Document& d : corpus) {
    if (doc_ids.count(d.doc_id)) out.push_back(d);
  }
  return out;
}

std::string LengthBucketName(int bucket) {
  return bucket == kLengthBuckets - 1 ? std::to_string(kLengthBuckets) + "+"
                                      : std::to_string(bucket + 1);
}

StatsReport CorpusStats(const Corpus& corpus) {
  StatsReport r;
  r.num_documents = static_cast<int>(corpus.size());
  int longer = 0;
  for (const Document& d : corpus) {
    r.num_sentences += static_cast<int>(d.sentences.size());
    r.num_tokens += d.num_tokens();
    for (const Mention& m : d.gold_mentions) {
      ++r.total_mentions;
      if (m.is_category) {
        ++r.category_counts[ClassIndex(*m.is_category)];
      } else {
        ++r.unlabeled_mentions;
      }
      ++r.length_histogram[LengthBucket(m.length())];
      if (m.length() > 10) ++longer;
    }
  }
  if (r.total_mentions > 0) {
    r.fraction_longer_than_10 = static_cast<double>(longer) / r.total_mentions;
  }
  if (r.num_sentences > 0) {
    r.mean_sentence_length = static_cast<double>(r.num_tokens) / r.num_sentences;
  }
  return r;
}

std::array<int, kNumCategories> IsnotesReferenceCounts() {
  // old, m/syntactic, m/worldKnowledge, m/bridging, m/comparative,
  // m/aggregate, m/function, new
  return {3237, 1592, 924, 663, 253, 211, 65, 4035};
}

void PrintDistribution(const StatsReport& stats, std::ostream& out) {
  const auto& c = stats.category_counts;
  int mediated = 0;
  for (int i = 1; i <= 6; ++i) mediated += c[i];
  out << "Documents            " << std::setw(8) << stats.num_documents << '\n'
      << "Sentences            " << std::setw(8) << stats.num_sentences << '\n'
      << "Mentions             " << std::setw(8) << stats.total_mentions << '\n'
      << "  old                " << std::setw(8) << c[0] << '\n'
      << "  mediated           " << std::setw(8) << mediated << '\n';
  static constexpr const char* kSub[] = {"syntactic", "world knowledge", "bridging",
                                         "comparative", "aggregate", "func"};
  for (int i = 1; i <= 6; ++i) {
    out << "    " << std::left << std::setw(17) << kSub[i - 1] << std::right
        << std::setw(8) << c[i] << '\n';
  }
  out << "  new                " << std::setw(8) << c[7] << '\n';
  if (stats.unlabeled_mentions > 0) {
    out << "  (no IS label)      " << std::setw(8) << stats.unlabeled_mentions << '\n';
  }
  out << std::fixed << std::setprecision(1)
      << "Longer than 10 tokens " << std::setw(6)
      << 100.0 * stats.fraction_longer_than_10 << "%\n"
      << "Mean sentence length " << std::setw(7) << stats.mean_sentence_length
      << '\n';
  out.unsetf(std::ios::fixed);
}

}  // namespace infostat

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

#ifndef INFOSTAT_CORPUS_H_
#define INFOSTAT_CORPUS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "infostat/document.h"

namespace infostat {

// ---------------------------------------------------------------------------
// Canonical line-delimited corpus format.
//
// One JSON record per line:
//   {"doc_id": "...",
//    "sentences": [["tok", ...], ...],
//    "mentions": [{"sent": 0, "start": 0, "end": 1, "is": "new",
//                  "subtype": "...", "score": 0.9}, ...],
//    "metadata": {"source": "...", "genre": "..."}}
// "is", "subtype" and "score" are optional. Blank lines are ignored.
// ---------------------------------------------------------------------------

Corpus LoadCanonical(const std::filesystem::path& path);
Corpus ReadCanonical(std::istream& in, const std::string& source_name);
void SaveCanonical(const Corpus& corpus, const std::filesystem::path& path);
void WriteCanonical(const Corpus& corpus, std::ostream& out);

// ---------------------------------------------------------------------------
// External-format adapters. Each returns documents sorted by doc_id and
// throws DataError on any unresolvable annotation. Formats are described in
// docs/corpus_formats.md.
// ---------------------------------------------------------------------------

// OntoNotes ONF base text merged with ISNotes MMAX-style markables.
Corpus LoadIsnotes(const std::filesystem::path& onf_root,
                   const std::filesystem::path& isnotes_root);

// OntoNotes CoNLL base text merged with BASHI bridging anaphor standoff.
Corpus LoadBashi(const std::filesystem::path& conll_root,
                 const std::filesystem::path& bashi_root);

// SciCorp token files plus bridging anaphor standoff, grouped by genre
// directory.
Corpus LoadScicorp(const std::filesystem::path& root);

// One ONF file: token listing only, traces removed.
struct OnfDocument {
  std::string doc_id;
  std::vector<std::vector<std::string>> sentences;
};
OnfDocument ParseOnf(std::istream& in, const std::string& doc_id);

// One CoNLL-2012 style file; a file may hold several documents and parts.
struct ConllDocument {
  std::string doc_id;
  std::vector<std::vector<std::string>> sentences;
};
std::vector<ConllDocument> ParseConll(std::istream& in,
                                      const std::string& source_name);

// ---------------------------------------------------------------------------
// Folds and statistics.
// ---------------------------------------------------------------------------

struct FoldSplit {
  int fold_id = 0;
  std::set<std::string> train_doc_ids;
  std::set<std::string> test_doc_ids;

  bool operator==(const FoldSplit&) const = default;
};

// Seeded shuffle of doc_ids followed by round-robin assignment.
std::vector<FoldSplit> MakeFolds(const Corpus& corpus, int k, uint64_t seed);

// Subset of the corpus in original order.
Corpus SelectDocuments(const Corpus& corpus,
                       const std::set<std::string>& doc_ids);

inline constexpr int kLengthBuckets = 11;  // 1..10 and 11+

// Bucket index for a mention length: 0 for length 1, ..., 10 for 11+.
inline int LengthBucket(int length) {
  return length >= kLengthBuckets ? kLengthBuckets - 1 : length - 1;
}
std::string LengthBucketName(int bucket);

struct StatsReport {
  int num_documents = 0;
  int num_sentences = 0;
  int num_tokens = 0;
  int total_mentions = 0;
  std::array<int, kNumCategories> category_counts{};
  int unlabeled_mentions = 0;
  std::array<int, kLengthBuckets> length_histogram{};
  double fraction_longer_than_10 = 0.0;
  double mean_sentence_length = 0.0;
};

StatsReport CorpusStats(const Corpus& corpus);

// Table-style distribution summary (per category plus mediated subtotal).
void PrintDistribution(const StatsReport& stats, std::ostream& out);

// Published ISNotes distribution, in category order; total 10,980.
std::array<int, kNumCategories> IsnotesReferenceCounts();
inline constexpr int kIsnotesReferenceDocuments = 50;
inline constexpr int kIsnotesReferenceMentions = 10980;
inline constexpr int kBashiReferenceDocuments = 50;
inline constexpr int kBashiReferenceAnaphors = 459;
inline constexpr int kScicorpReferenceDocuments = 14;
inline constexpr int kScicorpReferenceAnaphors = 1366;

}  // namespace infostat

#endif  // INFOSTAT_CORPUS_H_

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

#ifndef INFOSTAT_SPANGEN_H_
#define INFOSTAT_SPANGEN_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "infostat/document.h"

namespace infostat {

struct SpanGenConfig {
  int max_train_span_len = 10;
  std::string marker_open = "[SEP1]";
  std::string marker_close = "[SEP2]";
  std::string separator = "[SEP]";
  std::string seen_token = "true";
  std::string unseen_token = "false";
  int max_seq_len = 128;
  // Lowercased first-token strings skipped when the inference heuristic is on.
  std::set<std::string> pruning_lexicon;

  // Throws ConfigError on a violated invariant.
  void Validate() const;
};

// Default config with the bundled pruning lexicon loaded.
SpanGenConfig DefaultSpanGenConfig();

// Throws DataError if any special token occurs as a corpus token.
void CheckSpecialTokensAbsent(const SpanGenConfig& config, const Corpus& corpus);

// One token per line, '#' starts a comment, entries are lowercased.
std::set<std::string> LoadLexicon(const std::filesystem::path& path);
std::set<std::string> ParseLexicon(std::string_view text);
const std::set<std::string>& DefaultPruningLexicon();

struct SpanCandidate {
  int sent_index = 0;
  int start = 0;
  int end = 0;
  std::optional<bool> label;

  int length() const { return end - start + 1; }
  bool operator==(const SpanCandidate&) const = default;
};

// A word sequence with one open and one close marker around a span, and an
// optional two-word tail ([SEP] flag) appended after the sentence.
struct MarkedSequence {
  std::vector<std::string> words;
  int marker_open_pos = 0;
  int marker_close_pos = 0;
  int tail_size = 0;
  // Context words removed by truncation on each side.
  int trimmed_left = 0;
  int trimmed_right = 0;

  bool operator==(const MarkedSequence&) const = default;
};

// Number of training candidates for a sentence of n words and max length L.
long long TrainingSpanCount(long long n, long long max_len);

// Every span of at most config.max_train_span_len words, labeled positive
// iff it equals a gold span. Gold mentions of other sentences are ignored.
std::vector<SpanCandidate> EnumerateTrainingSpans(
    const Sentence& sentence, std::span<const Mention> gold_mentions,
    const SpanGenConfig& config);

// All spans ordered by (start, end); with the heuristic on, spans whose first
// token is in the pruning lexicon are skipped.
std::vector<SpanCandidate> EnumerateInferenceSpans(const Sentence& sentence,
                                                   bool heuristic_on,
                                                   const SpanGenConfig& config);

MarkedSequence InsertMarkers(std::span<const std::string> tokens, int start,
                             int end, const SpanGenConfig& config);

// InsertMarkers plus [separator, seen_token|unseen_token].
MarkedSequence BuildIsInput(std::span<const std::string> tokens,
                            const Mention& mention, bool seen,
                            const SpanGenConfig& config);

// Words of the (possibly truncated) sentence with markers and tail removed.
std::vector<std::string> StripMarkers(const MarkedSequence& marked);

// True iff a mention strictly earlier in document order has the same
// lowercased surface string. `mention` must belong to `document`.
bool PriorStringSeen(const Mention& mention, const Document& document,
                     std::span<const Mention> mention_order);

// Seen flags for a whole mention list at once; result is indexed like the
// input (the input need not be sorted).
std::vector<bool> SeenFlags(const Document& document,
                            std::span<const Mention> mentions);

// Measures a sequence in encoder units.
using LengthFunction = std::function<int(const MarkedSequence&)>;

// Word count, the length used when no encoder is involved.
int WordLength(const MarkedSequence& marked);

// Removes context words until encoded_length(result) <= max_seq_len, always
// from the side with more remaining context (alternating on ties, left
// first). Markers, span words and the tail are never removed; throws
// SpanTooLongError if they alone exceed the budget.
MarkedSequence Truncate(const MarkedSequence& marked, int max_seq_len,
                        const LengthFunction& encoded_length = WordLength);

}  // namespace infostat

#endif  // INFOSTAT_SPANGEN_H_

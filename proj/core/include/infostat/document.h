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

#ifndef INFOSTAT_DOCUMENT_H_
#define INFOSTAT_DOCUMENT_H_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infostat {

// Fine-grained information status. The enumerator order is the class-index
// order used by every model head and the argmax tie-break.
enum class ISCategory : int {
  kOld = 0,
  kMediatedSyntactic,
  kMediatedWorldKnowledge,
  kMediatedBridging,
  kMediatedComparative,
  kMediatedAggregate,
  kMediatedFunction,
  kNew,
};

inline constexpr int kNumCategories = 8;

inline constexpr std::array<ISCategory, kNumCategories> kAllCategories = {
    ISCategory::kOld,
    ISCategory::kMediatedSyntactic,
    ISCategory::kMediatedWorldKnowledge,
    ISCategory::kMediatedBridging,
    ISCategory::kMediatedComparative,
    ISCategory::kMediatedAggregate,
    ISCategory::kMediatedFunction,
    ISCategory::kNew,
};

// Canonical serialization, e.g. "mediated/worldKnowledge".
std::string_view ToString(ISCategory category);

// Inverse of ToString. Accepts only the eight canonical strings.
std::optional<ISCategory> ParseCategory(std::string_view text);

// Short column label used in report tables ("m/bridging").
std::string_view ShortName(ISCategory category);

inline int ClassIndex(ISCategory category) {
  return static_cast<int>(category);
}

inline ISCategory CategoryFromIndex(int index) {
  return static_cast<ISCategory>(index);
}

struct Token {
  std::string text;
  int index = 0;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string doc_id;
  int sent_index = 0;
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  std::vector<std::string> Words() const;

  bool operator==(const Sentence&) const = default;
};

// Identity of a mention: (doc_id, sent_index, start, end), ordered in
// document order.
struct SpanKey {
  std::string doc_id;
  int sent_index = 0;
  int start = 0;
  int end = 0;

  auto operator<=>(const SpanKey&) const = default;
  bool operator==(const SpanKey&) const = default;
};

struct Mention {
  std::string doc_id;
  int sent_index = 0;
  int start = 0;  // inclusive token index
  int end = 0;    // inclusive token index
  std::optional<ISCategory> is_category;
  std::optional<double> score;
  // Corpus-specific annotation tag, e.g. "containing-inferrable".
  std::optional<std::string> subtype;

  int length() const { return end - start + 1; }
  SpanKey key() const { return {doc_id, sent_index, start, end}; }

  bool operator==(const Mention&) const = default;
};

// Document order: sentence, then start, then end.
bool DocumentOrderLess(const Mention& a, const Mention& b);

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;
  std::vector<Mention> gold_mentions;
  std::map<std::string, std::string> metadata;

  int num_tokens() const;

  // Checks sentence/token/mention invariants; throws DataError naming the
  // offending element.
  void Validate() const;

  bool operator==(const Document&) const = default;
};

using Corpus = std::vector<Document>;

// Builds a sentence with contiguous token indices.
Sentence MakeSentence(std::string doc_id, int sent_index,
                      const std::vector<std::string>& words);

// Lowercased, single-space-joined token text of a span.
std::string NormalizedSurface(const Sentence& sentence, int start, int end);

// Space-joined token text of a span, original casing.
std::string Surface(const Sentence& sentence, int start, int end);

// ASCII lowercase; bytes outside ASCII are left unchanged.
std::string AsciiLower(std::string_view text);

// Throws DataError unless the mention resolves inside the document.
void CheckMentionInDocument(const Mention& mention, const Document& document);

int TotalMentions(const Corpus& corpus);

}  // namespace infostat

#endif  // INFOSTAT_DOCUMENT_H_

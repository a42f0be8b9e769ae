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

#include "infostat/document.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "infostat/errors.h"

namespace infostat {
namespace {

constexpr std::array<std::string_view, kNumCategories> kCanonicalNames = {
    "old",
    "mediated/syntactic",
    "mediated/worldKnowledge",
    "mediated/bridging",
    "mediated/comparative",
    "mediated/aggregate",
    "mediated/function",
    "new",
};

constexpr std::array<std::string_view, kNumCategories> kShortNames = {
    "old",          "m/syntactic",  "m/worldKnow.", "m/bridging",
    "m/comparative", "m/aggregate", "m/function",   "new",
};

std::string MentionName(const Mention& m) {
  return m.doc_id + ":" + std::to_string(m.sent_index) + ":" +
         std::to_string(m.start) + "-" + std::to_string(m.end);
}

}  // namespace

std::string_view ToString(ISCategory category) {
  return kCanonicalNames[ClassIndex(category)];
}

std::string_view ShortName(ISCategory category) {
  return kShortNames[ClassIndex(category)];
}

std::optional<ISCategory> ParseCategory(std::string_view text) {
  for (int i = 0; i < kNumCategories; ++i) {
    if (kCanonicalNames[i] == text) return CategoryFromIndex(i);
  }
  return std::nullopt;
}

std::vector<std::string> Sentence::Words() const {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const Token& t : tokens) words.push_back(t.text);
  return words;
}

bool DocumentOrderLess(const Mention& a, const Mention& b) {
  return std::tie(a.sent_index, a.start, a.end) <
         std::tie(b.sent_index, b.start, b.end);
}

int Document::num_tokens() const {
  int n = 0;
  for (const Sentence& s : sentences) n += s.size();
  return n;
}

void Document::Validate() const {
  if (doc_id.empty()) throw DataError("document with empty doc_id");
  for (size_t i = 0; i < sentences.size(); ++i) {
    const Sentence& s = sentences[i];
    if (s.sent_index != static_cast<int>(i)) {
      throw DataError(doc_id + ": sentence indices not contiguous at " +
                      std::to_string(i));
    }
    if (s.doc_id != doc_id) {
      throw DataError(doc_id + ": sentence " + std::to_string(i) +
                      " belongs to document '" + s.doc_id + "'");
    }
    if (s.tokens.empty()) {
      throw DataError(doc_id + ": sentence " + std::to_string(i) +
                      " has no tokens");
    }
    for (size_t j = 0; j < s.tokens.size(); ++j) {
      if (s.tokens[j].index != static_cast<int>(j)) {
        throw DataError(doc_id + ": sentence " + std::to_string(i) +
                        " token indices not contiguous at " +
                        std::to_string(j));
      }
      if (s.tokens[j].text.empty()) {
        throw DataError(doc_id + ": sentence " + std::to_string(i) +
                        " token " + std::to_string(j) + " is empty");
      }
    }
  }
  std::set<SpanKey> seen;
  for (const Mention& m : gold_mentions) {
    CheckMentionInDocument(m, *this);
    if (!seen.insert(m.key()).second) {
      throw DataError("duplicate mention " + MentionName(m));
    }
  }
}

Sentence MakeSentence(std::string doc_id, int sent_index,
                      const std::vector<std::string>& words) {
  Sentence s;
  s.doc_id = std::move(doc_id);
  s.sent_index = sent_index;
  s.tokens.reserve(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    s.tokens.push_back({words[i], static_cast<int>(i)});
  }
  return s;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string Surface(const Sentence& sentence, int start, int end) {
  std::string out;
  for (int i = start; i <= end; ++i) {
    if (i > start) out.push_back(' ');
    out += sentence.tokens[i].text;
  }
  return out;
}

std::string NormalizedSurface(const Sentence& sentence, int start, int end) {
  return AsciiLower(Surface(sentence, start, end));
}

void CheckMentionInDocument(const Mention& m, const Document& document) {
  if (m.doc_id != document.doc_id) {
    throw DataError("mention " + MentionName(m) + " does not belong to " +
                    document.doc_id);
  }
  if (m.sent_index < 0 ||
      m.sent_index >= static_cast<int>(document.sentences.size())) {
    throw DataError("mention " + MentionName(m) +
                    " references nonexistent sentence");
  }
  const int n = document.sentences[m.sent_index].size();
  if (m.start < 0 || m.start > m.end || m.end >= n) {
    throw DataError("mention " + MentionName(m) +
                    " references nonexistent token (sentence length " +
                    std::to_string(n) + ")");
  }
  if (m.score && (*m.score < 0.0 || *m.score > 1.0)) {
    throw DataError("mention " + MentionName(m) + " score outside [0,1]");
  }
}

int TotalMentions(const Corpus& corpus) {
  int n = 0;
  for (const Document& d : corpus) n += static_cast<int>(d.gold_mentions.size());
  return n;
}

}  // namespace infostat

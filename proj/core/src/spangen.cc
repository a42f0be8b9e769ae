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

#include "infostat/spangen.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "infostat/errors.h"

namespace infostat {
namespace {

constexpr char kDefaultLexicon[] =
#include "default_lexicon.inc"
    ;

void CheckSpan(std::span<const std::string> tokens, int start, int end) {
  const int n = static_cast<int>(tokens.size());
  if (start < 0 || start > end || end >= n) {
    throw DataError("span (" + std::to_string(start) + "," + std::to_string(end) +
                    ") out of bounds for sentence of " + std::to_string(n) +
                    " tokens");
  }
}

std::string SpanPreview(const MarkedSequence& marked) {
  std::string s;
  const int last = std::min(marked.marker_close_pos, marked.marker_open_pos + 6);
  for (int i = marked.marker_open_pos + 1; i < last; ++i) {
    s += (s.empty() ? "" : " ") + marked.words[i];
  }
  if (last < marked.marker_close_pos) s += " ...";
  return s;
}

}  // namespace

void SpanGenConfig::Validate() const {
  if (max_train_span_len < 1) {
    throw ConfigError("max_train_span_len must be >= 1");
  }
  if (max_seq_len < 8) throw ConfigError("max_seq_len must be >= 8");
  const std::set<std::string> specials = {marker_open, marker_close, separator};
  if (specials.size() != 3 || marker_open.empty() || marker_close.empty() ||
      separator.empty()) {
    throw ConfigError("marker_open, marker_close and separator must be "
                      "non-empty and pairwise distinct");
  }
  if (seen_token.empty() || unseen_token.empty() || seen_token == unseen_token) {
    throw ConfigError("seen_token and unseen_token must be non-empty and distinct");
  }
}

SpanGenConfig DefaultSpanGenConfig() {
  SpanGenConfig config;
  config.pruning_lexicon = DefaultPruningLexicon();
  return config;
}

void CheckSpecialTokensAbsent(const SpanGenConfig& config, const Corpus& corpus) {
  const std::set<std::string> specials = {config.marker_open, config.marker_close,
                                          config.separator};
  for (const Document& d : corpus) {
    for (const Sentence& s : d.sentences) {
      for (const Token& t : s.tokens) {
        if (specials.count(t.text)) {
          throw DataError(d.doc_id + ": sentence " + std::to_string(s.sent_index) +
                          " contains reserved token " + t.text);
        }
      }
    }
  }
}

std::set<std::string> ParseLexicon(std::string_view text) {
  std::set<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      // A lone "#" is a punctuation entry; anything after it is a comment.
      if (hash == line.find_first_not_of(" \t") &&
          line.find_first_not_of(" \t\r", hash + 1) == std::string::npos) {
        out.insert("#");
        continue;
      }
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string w;
    if (words >> w) out.insert(AsciiLower(w));
  }
  return out;
}

std::set<std::string> LoadLexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lexicon file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseLexicon(buffer.str());
}

const std::set<std::string>& DefaultPruningLexicon() {
  static const std::set<std::string> lexicon = ParseLexicon(kDefaultLexicon);
  return lexicon;
}

long long TrainingSpanCount(long long n, long long max_len) {
  if (max_len < n) return n * max_len - max_len * (max_len - 1) / 2;
  return n * (n + 1) / 2;
}

std::vector<SpanCandidate> EnumerateTrainingSpans(
    const Sentence& sentence, std::span<const Mention> gold_mentions,
    const SpanGenConfig& config) {
  std::set<std::pair<int, int>> gold;
  for (const Mention& m : gold_mentions) {
    if (m.doc_id == sentence.doc_id && m.sent_index == sentence.sent_index) {
      gold.emplace(m.start, m.end);
    }
  }
  const int n = sentence.size();
  const int max_len = config.max_train_span_len;
  std::vector<SpanCandidate> out;
  out.reserve(static_cast<size_t>(TrainingSpanCount(n, max_len)));
  for (int start = 0; start < n; ++start) {
    const int last = std::min(n - 1, start + max_len - 1);
    for (int end = start; end <= last; ++end) {
      out.push_back({sentence.sent_index, start, end,
                     gold.count({start, end}) > 0});
    }
  }
  return out;
}

std::vector<SpanCandidate> EnumerateInferenceSpans(const Sentence& sentence,
                                                   bool heuristic_on,
                                                   const SpanGenConfig& config) {
  const int n = sentence.size();
  std::vector<SpanCandidate> out;
  out.reserve(static_cast<size_t>(n) * (n + 1) / 2);
  for (int start = 0; start < n; ++start) {
    if (heuristic_on &&
        config.pruning_lexicon.count(AsciiLower(sentence.tokens[start].text))) {
      continue;
    }
    for (int end = start; end < n; ++end) {
      out.push_back({sentence.sent_index, start, end, std::nullopt});
    }
  }
  return out;
}

MarkedSequence InsertMarkers(std::span<const std::string> tokens, int start,
                             int end, const SpanGenConfig& config) {
  CheckSpan(tokens, start, end);
  MarkedSequence out;
  out.words.reserve(tokens.size() + 4);
  out.words.insert(out.words.end(), tokens.begin(), tokens.begin() + start);
  out.marker_open_pos = start;
  out.words.push_back(config.marker_open);
  out.words.insert(out.words.end(), tokens.begin() + start,
                   tokens.begin() + end + 1);
  out.marker_close_pos = static_cast<int>(out.words.size());
  out.words.push_back(config.marker_close);
  out.words.insert(out.words.end(), tokens.begin() + end + 1, tokens.end());
  return out;
}

MarkedSequence BuildIsInput(std::span<const std::string> tokens,
                            const Mention& mention, bool seen,
                            const SpanGenConfig& config) {
  MarkedSequence out = InsertMarkers(tokens, mention.start, mention.end, config);
  out.words.push_back(config.separator);
  out.words.push_back(seen ? config.seen_token : config.unseen_token);
  out.tail_size = 2;
  return out;
}

std::vector<std::string> StripMarkers(const MarkedSequence& marked) {
  std::vector<std::string> out;
  const int body = static_cast<int>(marked.words.size()) - marked.tail_size;
  for (int i = 0; i < body; ++i) {
    if (i == marked.marker_open_pos || i == marked.marker_close_pos) continue;
    out.push_back(marked.words[i]);
  }
  return out;
}

bool PriorStringSeen(const Mention& mention, const Document& document,
                     std::span<const Mention> mention_order) {
  CheckMentionInDocument(mention, document);
  const std::string target = NormalizedSurface(
      document.sentences[mention.sent_index], mention.start, mention.end);
  for (const Mention& other : mention_order) {
    if (!DocumentOrderLess(other, mention)) continue;
    CheckMentionInDocument(other, document);
    if (NormalizedSurface(document.sentences[other.sent_index], other.start,
                          other.end) == target) {
      return true;
    }
  }
  return false;
}

std::vector<bool> SeenFlags(const Document& document,
                            std::span<const Mention> mentions) {
  std::vector<size_t> order(mentions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return DocumentOrderLess(mentions[a], mentions[b]);
  });
  std::vector<bool> flags(mentions.size(), false);
  std::unordered_set<std::string> earlier;
  size_t i = 0;
  while (i < order.size()) {
    // Mentions with an identical span are not earlier than one another.
    size_t j = i;
    std::vector<std::string> group;
    while (j < order.size() && !DocumentOrderLess(mentions[order[i]], mentions[order[j]])) {
      const Mention& m = mentions[order[j]];
      CheckMentionInDocument(m, document);
      group.push_back(
          NormalizedSurface(document.sentences[m.sent_index], m.start, m.end));
      flags[order[j]] = earlier.count(group.back()) > 0;
      ++j;
    }
    earlier.insert(group.begin(), group.end());
    i = j;
  }
  return flags;
}

int WordLength(const MarkedSequence& marked) {
  return static_cast<int>(marked.words.size());
}

MarkedSequence Truncate(const MarkedSequence& marked, int max_seq_len,
                        const LengthFunction& encoded_length) {
  if (encoded_length(marked) <= max_seq_len) return marked;

  const int size = static_cast<int>(marked.words.size());
  const int left_context = marked.marker_open_pos;
  const int right_context = size - marked.tail_size - marked.marker_close_pos - 1;

  // Removal order: true = drop the leftmost context word, false = rightmost.
  std::vector<bool> from_left;
  from_left.reserve(left_context + right_context);
  int left = left_context, right = right_context;
  bool tie_left = true;
  while (left > 0 || right > 0) {
    bool take_left;
    if (left != right) {
      take_left = left > right;
    } else {
      take_left = tie_left;
      tie_left = !tie_left;
    }
    from_left.push_back(take_left);
    (take_left ? left : right) -= 1;
  }

  auto build = [&](int removals) {
    int drop_left = 0;
    for (int i = 0; i < removals; ++i) drop_left += from_left[i] ? 1 : 0;
    const int drop_right = removals - drop_left;
    MarkedSequence out;
    const int body_end = size - marked.tail_size;  // exclusive
    out.words.assign(marked.words.begin() + drop_left,
                     marked.words.begin() + (body_end - drop_right));
    out.words.insert(out.words.end(), marked.words.begin() + body_end,
                     marked.words.end());
    out.marker_open_pos = marked.marker_open_pos - drop_left;
    out.marker_close_pos = marked.marker_close_pos - drop_left;
    out.tail_size = marked.tail_size;
    out.trimmed_left = marked.trimmed_left + drop_left;
    out.trimmed_right = marked.trimmed_right + drop_right;
    return out;
  };

  const int max_removals = static_cast<int>(from_left.size());
  MarkedSequence shortest = build(max_removals);
  if (encoded_length(shortest) > max_seq_len) {
    throw SpanTooLongError("span '" + SpanPreview(marked) + "' (" +
                           std::to_string(marked.marker_close_pos -
                                          marked.marker_open_pos - 1) +
                           " words) does not fit the sequence budget of " +
                           std::to_string(max_seq_len));
  }
  // Smallest removal count that fits; `best` always holds build(hi).
  int lo = 1, hi = max_removals;
  MarkedSequence best = std::move(shortest);
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    MarkedSequence candidate = build(mid);
    if (encoded_length(candidate) <= max_seq_len) {
      hi = mid;
      best = std::move(candidate);
    } else {
      lo = mid + 1;
    }
  }
  return best;
}

}  // namespace infostat

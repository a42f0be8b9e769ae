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

#ifndef INFOSTAT_MENTION_MODEL_H_
#define INFOSTAT_MENTION_MODEL_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "infostat/classifier.h"
#include "infostat/document.h"
#include "infostat/encoder.h"
#include "infostat/spangen.h"

namespace infostat {

// Binary span classifier: class 1 is "mention".
struct MentionModel {
  std::unique_ptr<EncoderBackend> backend;
  LinearHead head;
  TrainConfig train_config;
  SpanGenConfig spangen;
  TrainingLog log;
};

inline constexpr double kMentionThreshold = 0.5;

// Trains on every span of at most spangen.max_train_span_len words in the
// training documents. Throws DataError if no span matches a gold mention.
MentionModel TrainMentionExtractor(const Corpus& train_docs,
                                   const TrainConfig& config,
                                   std::unique_ptr<EncoderBackend> backend,
                                   const SpanGenConfig& spangen);

// Positive-class probability of one span. Spans whose marked form cannot
// fit the sequence budget score 0.
double ScoreSpan(const MentionModel& model, const Sentence& sentence, int start,
                 int end);

// Every inference span (optionally capped at test_max_len words) whose
// positive-class probability exceeds 0.5, sorted by (sent, start, end).
// Nested and overlapping predictions are all kept.
std::vector<Mention> PredictMentions(const MentionModel& model,
                                     const Document& document, bool heuristic_on,
                                     std::optional<int> test_max_len = std::nullopt);

void SaveMentionModel(const MentionModel& model, const std::filesystem::path& dir);
MentionModel LoadMentionModel(const std::filesystem::path& dir);

}  // namespace infostat

#endif  // INFOSTAT_MENTION_MODEL_H_

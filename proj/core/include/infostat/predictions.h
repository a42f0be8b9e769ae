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

#ifndef INFOSTAT_PREDICTIONS_H_
#define INFOSTAT_PREDICTIONS_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infostat/document.h"
#include "infostat/is_model.h"
#include "infostat/mention_model.h"

namespace infostat {

// One line of a prediction file:
//   {doc_id, sent, start, end, surface, is?, score_mention?, score_is?}
struct Prediction {
  Mention mention;  // is_category set when an IS model ran; score unused
  std::string surface;
  std::optional<double> score_mention;
  std::optional<double> score_is;

  bool operator==(const Prediction&) const = default;
};

void WritePredictions(std::span<const Prediction> predictions, std::ostream& out);
void SavePredictions(std::span<const Prediction> predictions,
                     const std::filesystem::path& path);
// Throws DataError naming the line and field of a malformed record.
std::vector<Prediction> ReadPredictions(std::istream& in, const std::string& source);
std::vector<Prediction> LoadPredictions(const std::filesystem::path& path);

// The mention of each prediction with score set to score_is, else
// score_mention.
std::vector<Mention> PredictionMentions(std::span<const Prediction> predictions);

// Throws DataError unless every prediction resolves in the corpus with a
// matching surface string.
void CheckPredictionsAgainstCorpus(std::span<const Prediction> predictions,
                                   const Corpus& corpus);

enum class PredictMode { kGoldMentions, kEndToEnd };

struct PredictOptions {
  PredictMode mode = PredictMode::kEndToEnd;
  bool heuristic = false;
  std::optional<int> test_max_len;
};

// Gold-mention mode labels the document's gold spans and requires
// `is_model`. End-to-end mode extracts mentions with `mention_model` and,
// if `is_model` is given, labels them. Output is in document order.
std::vector<Prediction> PredictDocument(const Document& document,
                                        const MentionModel* mention_model,
                                        const ISModel* is_model,
                                        const PredictOptions& options);

}  // namespace infostat

#endif  // INFOSTAT_PREDICTIONS_H_

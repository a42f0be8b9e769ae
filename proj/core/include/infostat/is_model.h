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

#ifndef INFOSTAT_IS_MODEL_H_
#define INFOSTAT_IS_MODEL_H_

#include <filesystem>
#include <memory>
#include <vector>

#include "infostat/classifier.h"
#include "infostat/document.h"
#include "infostat/encoder.h"
#include "infostat/spangen.h"

namespace infostat {

// Eight-way information status classifier over marked mention inputs with
// the prior-string-match flag. Class index i is CategoryFromIndex(i).
struct ISModel {
  std::unique_ptr<EncoderBackend> backend;
  LinearHead head;
  TrainConfig train_config;
  SpanGenConfig spangen;
  TrainingLog log;
};

// One training instance per gold mention; seen flags come from the gold
// mentions in document order. Throws DataError for an unlabeled mention.
ISModel TrainIsAssigner(const Corpus& train_docs, const TrainConfig& config,
                        std::unique_ptr<EncoderBackend> backend,
                        const SpanGenConfig& spangen);

// Model inputs (after truncation) for a mention list, indexed like the
// input. Seen flags are computed over the list itself.
std::vector<MarkedSequence> IsInputs(const ISModel& model, const Document& document,
                                     std::span<const Mention> mentions);

// Class probabilities per mention, indexed like the input.
std::vector<Vector> IsProbabilities(const ISModel& model, const Document& document,
                                    std::span<const Mention> mentions);

// Copies of the input mentions, in input order, with is_category set to the
// argmax class and score set to its probability. Throws DataError for a
// mention that does not belong to the document.
std::vector<Mention> AssignIs(const ISModel& model, const Document& document,
                              std::span<const Mention> mentions);

void SaveIsModel(const ISModel& model, const std::filesystem::path& dir);
ISModel LoadIsModel(const std::filesystem::path& dir);

}  // namespace infostat

#endif  // INFOSTAT_IS_MODEL_H_

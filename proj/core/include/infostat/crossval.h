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

#ifndef INFOSTAT_CROSSVAL_H_
#define INFOSTAT_CROSSVAL_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infostat/classifier.h"
#include "infostat/corpus.h"
#include "infostat/encoder.h"
#include "infostat/eval.h"
#include "infostat/predictions.h"
#include "infostat/spangen.h"

namespace infostat {

struct PipelineConfig {
  BackendSpec backend;
  TrainConfig mention_train = DefaultMentionTrainConfig();
  TrainConfig is_train = DefaultIsTrainConfig();
  SpanGenConfig spangen = DefaultSpanGenConfig();
  int folds = 10;
  uint64_t fold_seed = 1;
  // Assign IS to gold spans instead of extracted mentions.
  bool gold_mentions = false;
  bool heuristic = false;
  std::optional<int> test_max_len;
};

struct CrossvalResult {
  std::vector<FoldSplit> splits;
  // Pooled over all test folds, in corpus document order.
  std::vector<Prediction> predictions;
  MetricReport report;
  std::vector<MetricReport> fold_reports;
};

using ProgressSink = std::function<void(const std::string&)>;

// Trains per fold on the train documents, predicts the test documents and
// scores the pooled predictions once. With `artifact_dir`, each fold writes
// fold_<i>/{split.json, mention/, is/, predictions.jsonl, report.json}.
// A failing fold is rethrown with its fold id prepended.
CrossvalResult CrossvalRun(const Corpus& corpus, const PipelineConfig& config,
                           const std::optional<std::filesystem::path>& artifact_dir,
                           const ProgressSink& progress = {});

// Report for a set of predictions over the gold corpus in the given mode,
// length buckets included.
MetricReport EvaluatePredictions(const Corpus& gold, std::span<const Prediction> predictions,
                                 PredictMode mode);

}  // namespace infostat

#endif  // INFOSTAT_CROSSVAL_H_

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

#include "infostat/crossval.h"

#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "infostat/errors.h"
#include "infostat/is_model.h"
#include "infostat/mention_model.h"

namespace infostat {
namespace {

using nlohmann::json;

std::vector<Mention> GoldOf(const Corpus& corpus) {
  std::vector<Mention> out;
  for (const Document& d : corpus) {
    out.insert(out.end(), d.gold_mentions.begin(), d.gold_mentions.end());
  }
  return out;
}

void WriteJson(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << j.dump(1) << '\n';
}

template <typename Error>
[[noreturn]] void RethrowForFold(int fold, const Error& e) {
  throw Error("fold " + std::to_string(fold) + ": " + e.what());
}

std::vector<Prediction> RunFold(const Corpus& train, const Corpus& test,
                                const PipelineConfig& config,
                                const std::optional<std::filesystem::path>& dir,
                                const ProgressSink& progress) {
  std::optional<MentionModel> mention_model;
  if (!config.gold_mentions) {
    if (progress) progress("training mention model");
    mention_model = TrainMentionExtractor(train, config.mention_train,
                                          CreateBackend(WithSpecialTokens(config.backend, config.spangen)), config.spangen);
    if (dir) SaveMentionModel(*mention_model, *dir / "mention");
  }
  if (progress) progress("training IS model");
  ISModel is_model =
      TrainIsAssigner(train, config.is_train, CreateBackend(WithSpecialTokens(config.backend, config.spangen)), config.spangen);
  if (dir) SaveIsModel(is_model, *dir / "is");

  PredictOptions options;
  options.mode = config.gold_mentions ? PredictMode::kGoldMentions : PredictMode::kEndToEnd;
  options.heuristic = config.heuristic;
  options.test_max_len = config.test_max_len;
  std::vector<Prediction> out;
  for (const Document& d : test) {
    auto doc = PredictDocument(d, mention_model ? &*mention_model : nullptr, &is_model,
                               options);
    out.insert(out.end(), doc.begin(), doc.end());
  }
  return out;
}

}  // namespace

MetricReport EvaluatePredictions(const Corpus& gold, std::span<const Prediction> predictions,
                                 PredictMode mode) {
  CheckPredictionsAgainstCorpus(predictions, gold);
  const auto gold_mentions = GoldOf(gold);
  const auto pred = PredictionMentions(predictions);
  MetricReport report = mode == PredictMode::kGoldMentions ? EvalIsGold(gold_mentions, pred)
                                                           : EvalIsE2e(gold_mentions, pred);
  report.length_buckets = LengthBucketReport(gold_mentions, pred);
  return report;
}

CrossvalResult CrossvalRun(const Corpus& corpus, const PipelineConfig& config,
                           const std::optional<std::filesystem::path>& artifact_dir,
                           const ProgressSink& progress) {
  config.mention_train.Validate();
  config.is_train.Validate();
  config.spangen.Validate();
  for (const Document& d : corpus) d.Validate();
  CheckSpecialTokensAbsent(config.spangen, corpus);

  CrossvalResult result;
  result.splits = MakeFolds(corpus, config.folds, config.fold_seed);
  const PredictMode mode =
      config.gold_mentions ? PredictMode::kGoldMentions : PredictMode::kEndToEnd;

  std::map<std::string, std::vector<Prediction>> by_doc;
  for (const FoldSplit& split : result.splits) {
    const int fold = split.fold_id;
    std::optional<std::filesystem::path> dir;
    if (artifact_dir) {
      dir = *artifact_dir / ("fold_" + std::to_string(fold));
      std::filesystem::create_directories(*dir);
    }
    auto fold_progress = [&](const std::string& msg) {
      if (progress) progress("fold " + std::to_string(fold) + ": " + msg);
    };
    const Corpus train = SelectDocuments(corpus, split.train_doc_ids);
    const Corpus test = SelectDocuments(corpus, split.test_doc_ids);
    std::vector<Prediction> predictions;
    try {
      if (dir) {
        WriteJson({{"fold_id", fold},
                   {"train", split.train_doc_ids},
                   {"test", split.test_doc_ids}},
                  *dir / "split.json");
      }
      predictions = RunFold(train, test, config, dir, fold_progress);
      MetricReport fold_report = EvaluatePredictions(test, predictions, mode);
      if (dir) {
        SavePredictions(predictions, *dir / "predictions.jsonl");
        WriteJson(ToJson(fold_report), *dir / "report.json");
      }
      result.fold_reports.push_back(std::move(fold_report));
    } catch (const SpanTooLongError& e) {
      RethrowForFold(fold, e);
    } catch (const ConfigError& e) {
      RethrowForFold(fold, e);
    } catch (const DataError& e) {
      RethrowForFold(fold, e);
    } catch (const std::exception& e) {
      throw Error("fold " + std::to_string(fold) + ": " + e.what());
    }
    for (Prediction& p : predictions) by_doc[p.mention.doc_id].push_back(std::move(p));
  }
  for (const Document& d : corpus) {
    auto it = by_doc.find(d.doc_id);
    if (it == by_doc.end()) continue;
    result.predictions.insert(result.predictions.end(), it->second.begin(), it->second.end());
  }
  result.report = EvaluatePredictions(corpus, result.predictions, mode);
  return result;
}

}  // namespace infostat

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

#include "cli/commands.h"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>

#include "infostat/bridging.h"
#include "infostat/corpus.h"
#include "infostat/errors.h"
#include "infostat/eval.h"
#include "infostat/is_model.h"
#include "infostat/mention_model.h"

namespace infostat::cli {
namespace {

using nlohmann::json;

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
}

void RequireExists(const std::filesystem::path& path, const char* what) {
  if (path.empty()) throw ConfigError(std::string(what) + ": no path given");
  if (!std::filesystem::exists(path)) {
    throw DataError(std::string(what) + ": " + path.string() + " does not exist");
  }
}

std::vector<Mention> AllGold(const Corpus& corpus) {
  std::vector<Mention> out;
  for (const Document& d : corpus) {
    out.insert(out.end(), d.gold_mentions.begin(), d.gold_mentions.end());
  }
  return out;
}

std::vector<std::string> DocIds(const Corpus& corpus) {
  std::vector<std::string> ids;
  for (const Document& d : corpus) ids.push_back(d.doc_id);
  return ids;
}

void ApplyBudget(SpanGenConfig& spangen, std::optional<int> max_seq_len) {
  if (!max_seq_len) return;
  if (*max_seq_len < 8) throw ConfigError("max-seq-len: must be >= 8");
  spangen.max_seq_len = *max_seq_len;
}

std::vector<Prediction> RunModels(const Corpus& corpus,
                                  const std::optional<std::filesystem::path>& mention_dir,
                                  const std::optional<std::filesystem::path>& is_dir,
                                  const PredictOptions& options,
                                  std::optional<int> max_seq_len) {
  std::optional<MentionModel> mention_model;
  std::optional<ISModel> is_model;
  if (mention_dir) {
    RequireExists(*mention_dir, "mention model");
    mention_model = LoadMentionModel(*mention_dir);
    ApplyBudget(mention_model->spangen, max_seq_len);
    CheckSpecialTokensAbsent(mention_model->spangen, corpus);
  }
  if (is_dir) {
    RequireExists(*is_dir, "IS model");
    is_model = LoadIsModel(*is_dir);
    ApplyBudget(is_model->spangen, max_seq_len);
    CheckSpecialTokensAbsent(is_model->spangen, corpus);
  }
  std::vector<Prediction> out;
  for (const Document& d : corpus) {
    auto doc = PredictDocument(d, mention_model ? &*mention_model : nullptr,
                               is_model ? &*is_model : nullptr, options);
    out.insert(out.end(), doc.begin(), doc.end());
  }
  return out;
}

void PrintPrf(std::ostream& out, const std::string& label, const PRF& prf) {
  out << std::fixed << std::setprecision(1) << label << ": R " << 100 * prf.recall << "  P "
      << 100 * prf.precision << "  F " << 100 * prf.f1 << "  (gold " << prf.gold_count
      << ", pred " << prf.pred_count << ", correct " << prf.correct_count << ")\n";
  out.unsetf(std::ios::floatfield);
}

}  // namespace

int ExitCode(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return 1;
  if (dynamic_cast<const DataError*>(&e)) return 2;
  return 3;
}

void CmdConvert(const ConvertOptions& o, std::ostream& log) {
  Corpus corpus;
  if (o.format == "isnotes") {
    RequireExists(o.onf_root, "onf");
    RequireExists(o.isnotes_root, "isnotes");
    corpus = LoadIsnotes(o.onf_root, o.isnotes_root);
  } else if (o.format == "bashi") {
    RequireExists(o.conll_root, "conll");
    RequireExists(o.bashi_root, "bashi");
    corpus = LoadBashi(o.conll_root, o.bashi_root);
  } else if (o.format == "scicorp") {
    RequireExists(o.scicorp_root, "root");
    corpus = LoadScicorp(o.scicorp_root);
  } else {
    throw ConfigError("unknown corpus format '" + o.format + "'");
  }
  if (o.out.empty()) throw ConfigError("out: no path given");
  SaveCanonical(corpus, o.out);
  PrintDistribution(CorpusStats(corpus), log);
}

void CmdStats(const std::filesystem::path& corpus_path, std::ostream& out) {
  RequireExists(corpus_path, "corpus");
  const StatsReport stats = CorpusStats(LoadCanonical(corpus_path));
  PrintDistribution(stats, out);
}

void CmdTrain(const std::string& task, const RunConfig& config, std::ostream& log) {
  if (task != "mention" && task != "is") throw ConfigError("unknown task '" + task + "'");
  if (!config.corpus) throw ConfigError("corpus: no path given");
  if (!config.out_dir) throw ConfigError("out_dir: no path given");
  CheckPathsExist(config);
  const Corpus corpus = LoadCanonical(*config.corpus);
  const PipelineConfig& p = config.pipeline;
  auto backend = CreateBackend(WithSpecialTokens(p.backend, p.spangen));
  const auto model_dir = *config.out_dir / "model";
  std::filesystem::create_directories(*config.out_dir);
  json snapshot = ToJson(config);
  if (task == "mention") {
    snapshot.erase("is_train");
    const MentionModel model =
        TrainMentionExtractor(corpus, p.mention_train, std::move(backend), p.spangen);
    SaveMentionModel(model, model_dir);
    log << "trained mention model: " << model.log.loss.size() << " steps\n";
  } else {
    snapshot.erase("mention_train");
    const ISModel model = TrainIsAssigner(corpus, p.is_train, std::move(backend), p.spangen);
    SaveIsModel(model, model_dir);
    log << "trained IS model: " << model.log.loss.size() << " steps\n";
  }
  snapshot.erase("eval");
  snapshot["task"] = task;
  FinishRunDirectory(*config.out_dir, "train " + task, snapshot);
  log << "wrote " << model_dir.string() << '\n';
}

void CmdPredict(const PredictCliOptions& o, std::ostream& log) {
  RequireExists(o.corpus, "corpus");
  if (o.predict.mode == PredictMode::kGoldMentions && !o.is_model) {
    throw ConfigError("--gold-mentions needs --is-model");
  }
  if (o.predict.mode == PredictMode::kEndToEnd && !o.mention_model) {
    throw ConfigError("--e2e needs --mention-model");
  }
  if (o.out.empty()) throw ConfigError("out: no path given");
  const Corpus corpus = LoadCanonical(o.corpus);
  const std::optional<std::filesystem::path> mention_dir =
      o.predict.mode == PredictMode::kEndToEnd ? o.mention_model : std::nullopt;
  const auto predictions = RunModels(corpus, mention_dir, o.is_model, o.predict, o.max_seq_len);
  SavePredictions(predictions, o.out);
  log << "wrote " << predictions.size() << " predictions to " << o.out.string() << '\n';
}

void CmdEvaluate(const EvaluateOptions& o, std::ostream& out) {
  RequireExists(o.gold, "gold");
  RequireExists(o.predictions, "predictions");
  const Corpus gold = LoadCanonical(o.gold);
  const auto predictions = LoadPredictions(o.predictions);
  MetricReport report;
  if (o.mode == "gold" || o.mode == "e2e") {
    report = EvaluatePredictions(
        gold, predictions, o.mode == "gold" ? PredictMode::kGoldMentions : PredictMode::kEndToEnd);
  } else if (o.mode == "mentions") {
    CheckPredictionsAgainstCorpus(predictions, gold);
    const auto gold_mentions = AllGold(gold);
    const auto pred = PredictionMentions(predictions);
    report.mention_prf = EvalMentions(gold_mentions, pred);
    report.length_buckets = LengthBucketReport(gold_mentions, pred);
  } else {
    throw ConfigError("mode: unknown evaluation mode '" + o.mode + "'");
  }
  const std::string text = FormatReport(report, o.buckets, o.confusion);
  out << text;
  if (o.out_dir) {
    std::filesystem::create_directories(*o.out_dir);
    WriteText(*o.out_dir / "report.txt", text);
    WriteText(*o.out_dir / "report.json", ToJson(report).dump(1) + "\n");
  }
}

void CmdCrossval(const RunConfig& config, std::ostream& out) {
  if (!config.corpus) throw ConfigError("corpus: no path given");
  CheckPathsExist(config);
  const Corpus corpus = LoadCanonical(*config.corpus);
  const auto result = CrossvalRun(corpus, config.pipeline, config.out_dir,
                                  [&](const std::string& msg) { std::cerr << msg << '\n'; });
  const std::string text = FormatReport(result.report, true, true);
  out << text;
  if (config.out_dir) {
    SavePredictions(result.predictions, *config.out_dir / "predictions.jsonl");
    WriteText(*config.out_dir / "report.txt", text);
    json report = ToJson(result.report);
    json folds = json::array();
    for (const MetricReport& r : result.fold_reports) folds.push_back(ToJson(r));
    report["folds"] = folds;
    WriteText(*config.out_dir / "report.json", report.dump(1) + "\n");
    FinishRunDirectory(*config.out_dir, "crossval", ToJson(config));
  }
}

void CmdBridging(const BridgingOptions& o, std::ostream& out) {
  if (o.corpus_type != "bashi" && o.corpus_type != "scicorp") {
    throw ConfigError("corpus type must be bashi or scicorp, got '" + o.corpus_type + "'");
  }
  RequireExists(o.corpus, "corpus");
  const Corpus corpus = LoadCanonical(o.corpus);
  std::vector<Prediction> predictions;
  if (o.predictions) {
    RequireExists(*o.predictions, "predictions");
    predictions = LoadPredictions(*o.predictions);
    CheckPredictionsAgainstCorpus(predictions, corpus);
  } else {
    if (!o.mention_model || !o.is_model) {
      throw ConfigError("bridging needs --predictions or both --mention-model and --is-model");
    }
    PredictOptions options;
    options.mode = PredictMode::kEndToEnd;
    options.heuristic = o.heuristic;
    predictions = RunModels(corpus, o.mention_model, o.is_model, options, o.max_seq_len);
  }
  const auto mentions = PredictionMentions(predictions);
  std::vector<Mention> gold = AllGold(corpus);
  std::vector<AnaphorPrediction> anaphors;
  if (o.corpus_type == "bashi") {
    anaphors = BashiAnaphors(mentions, corpus);
  } else {
    const auto determiners = o.determiners ? LoadDeterminers(*o.determiners) : DefaultDeterminers();
    anaphors = ScicorpAnaphors(mentions, corpus, determiners);
    gold = FilterContainingInferrable(gold, corpus,
                                      [](const std::string& msg) { std::cerr << msg << '\n'; });
  }
  const PRF prf = EvalBridging(gold, anaphors);
  PrintPrf(out, "bridging anaphora (" + o.corpus_type + ")", prf);
  if (o.out_dir) {
    std::filesystem::create_directories(*o.out_dir);
    if (!o.predictions) SavePredictions(predictions, *o.out_dir / "predictions.jsonl");
    std::map<std::string, const Document*> docs;
    for (const Document& d : corpus) docs[d.doc_id] = &d;
    std::vector<Prediction> kept;
    for (const AnaphorPrediction& a : anaphors) {
      Prediction p;
      p.mention = a.mention;
      p.mention.score.reset();
      p.surface = Surface(docs.at(a.mention.doc_id)->sentences[a.mention.sent_index],
                          a.mention.start, a.mention.end);
      p.score_is = a.mention.score;
      kept.push_back(std::move(p));
    }
    SavePredictions(kept, *o.out_dir / "anaphors.jsonl");
    json report = ToJson(prf);
    report["corpus"] = o.corpus_type;
    WriteText(*o.out_dir / "report.json", report.dump(1) + "\n");
  }
}

double CmdSignificance(const SignificanceOptions& o, std::ostream& out) {
  RequireExists(o.gold, "gold");
  RequireExists(o.pred_a, "pred-a");
  RequireExists(o.pred_b, "pred-b");
  const Scorer scorer = NamedScorer(o.metric);
  if (o.shuffles < 1000) throw ConfigError("shuffles: must be >= 1000");
  const Corpus gold = LoadCanonical(o.gold);
  const auto a = LoadPredictions(o.pred_a);
  const auto b = LoadPredictions(o.pred_b);
  CheckPredictionsAgainstCorpus(a, gold);
  CheckPredictionsAgainstCorpus(b, gold);
  const auto ids = DocIds(gold);
  const DocMentions g = GroupByDocument(AllGold(gold), ids);
  const DocMentions da = GroupByDocument(PredictionMentions(a), ids);
  const DocMentions db = GroupByDocument(PredictionMentions(b), ids);
  const double p = RandomizationTest(g, da, db, scorer, o.shuffles, o.seed);
  out << std::setprecision(6) << o.metric << ": A " << ScoreDocuments(scorer, g, da) << "  B "
      << ScoreDocuments(scorer, g, db) << "  p " << p << "  (" << o.shuffles
      << " shuffles, seed " << o.seed << ")\n";
  return p;
}

}  // namespace infostat::cli

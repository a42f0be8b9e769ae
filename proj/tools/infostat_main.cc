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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.h"
#include "infostat/errors.h"
#include "infostat/eval.h"

namespace {

using infostat::cli::RunConfig;

struct TrainOverrides {
  std::string backend;
  std::string model;
  std::string server_command;
  std::optional<int> epochs;
  std::optional<double> learning_rate;
  std::optional<int> batch_size;
  std::optional<uint64_t> seed;
  std::optional<int> max_seq_len;
  std::optional<long long> max_steps;
};

void AddTrainOverrides(CLI::App* cmd, TrainOverrides& o) {
  cmd->add_option("--backend", o.backend, "Encoder backend name");
  cmd->add_option("--model", o.model, "Pretrained model identifier or path");
  cmd->add_option("--server-command", o.server_command, "Encoder server command");
  cmd->add_option("--epochs", o.epochs, "Training epochs");
  cmd->add_option("--lr", o.learning_rate, "Learning rate");
  cmd->add_option("--batch-size", o.batch_size, "Batch size");
  cmd->add_option("--seed", o.seed, "Training seed");
  cmd->add_option("--max-seq-len", o.max_seq_len, "Sequence budget in encoder units");
  cmd->add_option("--max-steps", o.max_steps, "Cap on optimizer steps (0 = none)");
}

void ApplyTrain(const TrainOverrides& o, infostat::TrainConfig& t) {
  if (o.epochs) t.epochs = *o.epochs;
  if (o.learning_rate) t.learning_rate = *o.learning_rate;
  if (o.batch_size) t.batch_size = *o.batch_size;
  if (o.seed) t.seed = *o.seed;
  if (o.max_seq_len) t.max_seq_len = *o.max_seq_len;
  if (o.max_steps) t.max_steps = *o.max_steps;
  t.Validate();
}

void ApplyBackend(const TrainOverrides& o, RunConfig& c) {
  if (!o.backend.empty()) c.pipeline.backend.name = o.backend;
  if (!o.model.empty()) c.pipeline.backend.model = o.model;
  if (!o.server_command.empty()) c.pipeline.backend.server_command = o.server_command;
  if (o.max_seq_len) {
    c.pipeline.backend.max_seq_len = *o.max_seq_len;
    c.pipeline.spangen.max_seq_len = *o.max_seq_len;
  }
}

RunConfig BaseConfig(const std::string& config_path, const std::string& corpus,
                     const std::string& out) {
  RunConfig c = config_path.empty() ? RunConfig{} : infostat::cli::LoadRunConfig(config_path);
  if (!corpus.empty()) c.corpus = corpus;
  if (!out.empty()) c.out_dir = out;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mention extraction, information status assignment and evaluation"};
  app.require_subcommand(1);

  // convert
  infostat::cli::ConvertOptions convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a corpus release to canonical JSONL");
  convert_cmd->require_subcommand(1);
  auto* isnotes_cmd = convert_cmd->add_subcommand("isnotes", "ONF + ISNotes annotations");
  isnotes_cmd->add_option("--onf", convert.onf_root, "OntoNotes ONF directory")->required();
  isnotes_cmd->add_option("--isnotes", convert.isnotes_root, "ISNotes directory")->required();
  isnotes_cmd->add_option("--out", convert.out, "Output JSONL")->required();
  auto* bashi_cmd = convert_cmd->add_subcommand("bashi", "CoNLL-2012 + BASHI annotations");
  bashi_cmd->add_option("--conll", convert.conll_root, "CoNLL directory")->required();
  bashi_cmd->add_option("--bashi", convert.bashi_root, "BASHI directory")->required();
  bashi_cmd->add_option("--out", convert.out, "Output JSONL")->required();
  auto* scicorp_cmd = convert_cmd->add_subcommand("scicorp", "SciCorp release");
  scicorp_cmd->add_option("--root", convert.scicorp_root, "SciCorp directory")->required();
  scicorp_cmd->add_option("--out", convert.out, "Output JSONL")->required();

  // stats
  std::string stats_corpus;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics");
  stats_cmd->add_option("--corpus", stats_corpus, "Canonical corpus")->required();

  // train
  std::string train_task, train_config, train_corpus, train_out;
  TrainOverrides train_overrides;
  auto* train_cmd = app.add_subcommand("train", "Train a mention or IS model");
  train_cmd->add_option("task", train_task, "mention | is")
      ->required()
      ->check(CLI::IsMember({"mention", "is"}));
  train_cmd->add_option("--config", train_config, "Run config (JSON)");
  train_cmd->add_option("--corpus", train_corpus, "Canonical training corpus");
  train_cmd->add_option("--out", train_out, "Run directory");
  AddTrainOverrides(train_cmd, train_overrides);

  // predict
  infostat::cli::PredictCliOptions predict;
  std::string predict_mention, predict_is;
  bool gold_mentions = false, e2e = false;
  std::optional<int> test_max_len;
  auto* predict_cmd = app.add_subcommand("predict", "Write predictions for a corpus");
  predict_cmd->add_option("--corpus", predict.corpus, "Canonical corpus")->required();
  predict_cmd->add_option("--mention-model", predict_mention, "Mention model directory");
  predict_cmd->add_option("--is-model", predict_is, "IS model directory");
  auto* gold_flag = predict_cmd->add_flag("--gold-mentions", gold_mentions, "Label gold spans");
  auto* e2e_flag = predict_cmd->add_flag("--e2e", e2e, "Extract mentions, then label them");
  gold_flag->excludes(e2e_flag);
  predict_cmd->add_flag("--heuristic", predict.predict.heuristic, "Prune spans by first token");
  predict_cmd->add_option("--test-max-len", test_max_len, "Longest span to classify");
  predict_cmd->add_option("--max-seq-len", predict.max_seq_len, "Inference sequence budget");
  predict_cmd->add_option("--out", predict.out, "Output JSONL")->required();

  // evaluate
  infostat::cli::EvaluateOptions evaluate;
  std::string evaluate_out;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions against a gold corpus");
  evaluate_cmd->add_option("--gold", evaluate.gold, "Canonical gold corpus")->required();
  evaluate_cmd->add_option("--predictions", evaluate.predictions, "Prediction JSONL")->required();
  evaluate_cmd->add_option("--mode", evaluate.mode, "gold | e2e | mentions")
      ->check(CLI::IsMember({"gold", "e2e", "mentions"}));
  evaluate_cmd->add_flag("--buckets", evaluate.buckets, "Per-length report");
  evaluate_cmd->add_flag("--confusion", evaluate.confusion, "Confusion matrix");
  evaluate_cmd->add_option("--out", evaluate_out, "Report directory");

  // crossval
  std::string cv_config, cv_corpus, cv_out;
  std::optional<int> cv_folds, cv_test_max_len;
  std::optional<uint64_t> cv_fold_seed;
  bool cv_gold = false, cv_heuristic = false;
  auto* cv_cmd = app.add_subcommand("crossval", "k-fold cross-validation over documents");
  cv_cmd->add_option("--config", cv_config, "Run config (JSON)");
  cv_cmd->add_option("--corpus", cv_corpus, "Canonical corpus");
  cv_cmd->add_option("--out", cv_out, "Run directory");
  cv_cmd->add_option("--folds", cv_folds, "Number of folds");
  cv_cmd->add_option("--fold-seed", cv_fold_seed, "Fold shuffling seed");
  cv_cmd->add_flag("--gold-mentions", cv_gold, "Assign IS to gold spans");
  cv_cmd->add_flag("--heuristic", cv_heuristic, "Prune spans by first token");
  cv_cmd->add_option("--test-max-len", cv_test_max_len, "Longest span to classify");

  // bridging
  infostat::cli::BridgingOptions bridging;
  std::string br_predictions, br_mention, br_is, br_determiners, br_out;
  auto* br_cmd = app.add_subcommand("bridging", "Bridging anaphora recognition");
  br_cmd->add_option("corpus-type", bridging.corpus_type, "bashi | scicorp")
      ->required()
      ->check(CLI::IsMember({"bashi", "scicorp"}));
  br_cmd->add_option("--corpus", bridging.corpus, "Canonical corpus with gold anaphors")->required();
  br_cmd->add_option("--predictions", br_predictions, "IS-labeled prediction JSONL");
  br_cmd->add_option("--mention-model", br_mention, "Mention model directory");
  br_cmd->add_option("--is-model", br_is, "IS model directory");
  br_cmd->add_option("--determiners", br_determiners, "Determiner list file");
  br_cmd->add_flag("--heuristic", bridging.heuristic, "Prune spans by first token");
  br_cmd->add_option("--max-seq-len", bridging.max_seq_len, "Inference sequence budget");
  br_cmd->add_option("--out", br_out, "Report directory");

  // significance
  infostat::cli::SignificanceOptions sig;
  auto* sig_cmd = app.add_subcommand("significance", "Paired approximate randomization test");
  sig_cmd->add_option("--gold", sig.gold, "Canonical gold corpus")->required();
  sig_cmd->add_option("--pred-a", sig.pred_a, "System A predictions")->required();
  sig_cmd->add_option("--pred-b", sig.pred_b, "System B predictions")->required();
  sig_cmd->add_option("--metric", sig.metric, "Metric name")
      ->check(CLI::IsMember(infostat::ScorerNames()));
  sig_cmd->add_option("-n,--shuffles", sig.shuffles, "Number of shuffles (>= 1000)");
  sig_cmd->add_option("--seed", sig.seed, "Shuffle seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  auto opt_path = [](const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<std::filesystem::path>(s);
  };

  try {
    if (*convert_cmd) {
      if (*isnotes_cmd) convert.format = "isnotes";
      if (*bashi_cmd) convert.format = "bashi";
      if (*scicorp_cmd) convert.format = "scicorp";
      infostat::cli::CmdConvert(convert, std::cout);
    } else if (*stats_cmd) {
      infostat::cli::CmdStats(stats_corpus, std::cout);
    } else if (*train_cmd) {
      RunConfig c = BaseConfig(train_config, train_corpus, train_out);
      ApplyBackend(train_overrides, c);
      ApplyTrain(train_overrides, train_task == "mention" ? c.pipeline.mention_train
                                                          : c.pipeline.is_train);
      infostat::cli::CmdTrain(train_task, c, std::cout);
    } else if (*predict_cmd) {
      if (!gold_mentions && !e2e) throw infostat::ConfigError("predict needs --gold-mentions or --e2e");
      predict.predict.mode =
          gold_mentions ? infostat::PredictMode::kGoldMentions : infostat::PredictMode::kEndToEnd;
      predict.predict.test_max_len = test_max_len;
      if (test_max_len && *test_max_len < 1) throw infostat::ConfigError("test-max-len: must be >= 1");
      predict.mention_model = opt_path(predict_mention);
      predict.is_model = opt_path(predict_is);
      infostat::cli::CmdPredict(predict, std::cerr);
    } else if (*evaluate_cmd) {
      evaluate.out_dir = opt_path(evaluate_out);
      infostat::cli::CmdEvaluate(evaluate, std::cout);
    } else if (*cv_cmd) {
      RunConfig c = BaseConfig(cv_config, cv_corpus, cv_out);
      if (cv_folds) c.pipeline.folds = *cv_folds;
      if (cv_fold_seed) c.pipeline.fold_seed = *cv_fold_seed;
      if (cv_gold) c.pipeline.gold_mentions = true;
      if (cv_heuristic) c.pipeline.heuristic = true;
      if (cv_test_max_len) c.pipeline.test_max_len = *cv_test_max_len;
      infostat::cli::CmdCrossval(c, std::cout);
    } else if (*br_cmd) {
      bridging.predictions = opt_path(br_predictions);
      bridging.mention_model = opt_path(br_mention);
      bridging.is_model = opt_path(br_is);
      bridging.determiners = opt_path(br_determiners);
      bridging.out_dir = opt_path(br_out);
      infostat::cli::CmdBridging(bridging, std::cout);
    } else if (*sig_cmd) {
      infostat::cli::CmdSignificance(sig, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return infostat::cli::ExitCode(e);
  }
  return 0;
}

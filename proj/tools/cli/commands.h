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

#ifndef INFOSTAT_TOOLS_COMMANDS_H_
#define INFOSTAT_TOOLS_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "cli/run_config.h"
#include "infostat/predictions.h"

namespace infostat::cli {

// Every command throws ConfigError / DataError on failure; ExitCode maps
// the active exception to the process exit status.
int ExitCode(const std::exception& e);

struct ConvertOptions {
  std::string format;  // isnotes | bashi | scicorp
  std::filesystem::path onf_root;
  std::filesystem::path isnotes_root;
  std::filesystem::path conll_root;
  std::filesystem::path bashi_root;
  std::filesystem::path scicorp_root;
  std::filesystem::path out;
};
void CmdConvert(const ConvertOptions& options, std::ostream& log);

void CmdStats(const std::filesystem::path& corpus, std::ostream& out);

// task: mention | is. Needs config.corpus and config.out_dir.
void CmdTrain(const std::string& task, const RunConfig& config, std::ostream& log);

struct PredictCliOptions {
  std::filesystem::path corpus;
  std::optional<std::filesystem::path> mention_model;
  std::optional<std::filesystem::path> is_model;
  PredictOptions predict;
  // Overrides the inference sequence budget stored with the models.
  std::optional<int> max_seq_len;
  std::filesystem::path out;
};
void CmdPredict(const PredictCliOptions& options, std::ostream& log);

struct EvaluateOptions {
  std::filesystem::path gold;
  std::filesystem::path predictions;
  std::string mode = "e2e";  // gold | e2e | mentions
  bool buckets = false;
  bool confusion = false;
  std::optional<std::filesystem::path> out_dir;
};
void CmdEvaluate(const EvaluateOptions& options, std::ostream& out);

// Needs config.corpus; writes to config.out_dir when set.
void CmdCrossval(const RunConfig& config, std::ostream& out);

struct BridgingOptions {
  std::string corpus_type;  // bashi | scicorp
  std::filesystem::path corpus;
  // Either existing IS-labeled predictions or both models.
  std::optional<std::filesystem::path> predictions;
  std::optional<std::filesystem::path> mention_model;
  std::optional<std::filesystem::path> is_model;
  std::optional<std::filesystem::path> determiners;
  bool heuristic = false;
  std::optional<int> max_seq_len;
  std::optional<std::filesystem::path> out_dir;
};
void CmdBridging(const BridgingOptions& options, std::ostream& out);

struct SignificanceOptions {
  std::filesystem::path gold;
  std::filesystem::path pred_a;
  std::filesystem::path pred_b;
  std::string metric = "mention-f1";
  long long shuffles = 10000;
  uint64_t seed = 1;
};
// Returns the p-value after printing it.
double CmdSignificance(const SignificanceOptions& options, std::ostream& out);

}  // namespace infostat::cli

#endif  // INFOSTAT_TOOLS_COMMANDS_H_

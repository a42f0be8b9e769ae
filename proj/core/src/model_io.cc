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

#include "model_io.h"

#include <fstream>

#include <nlohmann/json.hpp>

#include "infostat/config_json.h"
#include "infostat/errors.h"

namespace infostat::internal {

using nlohmann::json;

void SaveModelParts(const std::string& task, const std::vector<std::string>& classes,
                    const EncoderBackend& backend, const LinearHead& head,
                    const TrainConfig& train_config, const SpanGenConfig& spangen,
                    const TrainingLog& log, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  backend.Save(dir / ModelFiles::kBackendDir);
  json j = {{"task", task},
            {"classes", classes},
            {"input_dim", head.input_dim()},
            {"weights", head.weights()},
            {"bias", head.bias()},
            {"train_config", ToJson(train_config)},
            {"spangen", ToJson(spangen)},
            {"backend", backend.name()},
            {"backend_fingerprint", backend.Fingerprint()}};
  std::ofstream out(dir / ModelFiles::kModel, std::ios::trunc);
  if (!out) throw DataError("cannot write " + (dir / ModelFiles::kModel).string());
  out << j.dump(1) << '\n';
  if (!out) throw DataError("write failed: " + (dir / ModelFiles::kModel).string());
  WriteTrainingLog(log, dir / ModelFiles::kTrainingLog);
}

ModelParts LoadModelParts(const std::string& task,
                          const std::vector<std::string>& classes,
                          const std::filesystem::path& dir) {
  const auto path = dir / ModelFiles::kModel;
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  ModelParts parts;
  try {
    if (j.at("task").get<std::string>() != task) {
      throw DataError(path.string() + ": artifact is a '" +
                      j.at("task").get<std::string>() + "' model, expected '" + task + "'");
    }
    if (j.at("classes").get<std::vector<std::string>>() != classes) {
      throw DataError(path.string() + ": class list does not match this build");
    }
    const int input_dim = j.at("input_dim").get<int>();
    parts.head = LinearHead(input_dim, static_cast<int>(classes.size()), 0);
    parts.head.SetParameters(j.at("weights").get<std::vector<double>>(),
                             j.at("bias").get<std::vector<double>>());
    parts.train_config = ParseTrainConfig(j.at("train_config"), "train_config", {});
    parts.spangen = ParseSpanGenConfig(j.at("spangen"), "spangen", {});
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  } catch (const ConfigError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  parts.backend = LoadBackend(dir / ModelFiles::kBackendDir);
  if (parts.backend->Fingerprint() != j.at("backend_fingerprint").get<uint64_t>()) {
    throw DataError(dir.string() + ": backend weights do not match the model fingerprint");
  }
  if (2 * parts.backend->hidden_dim() != parts.head.input_dim()) {
    throw DataError(dir.string() + ": head input dimension does not match the backend");
  }
  parts.log = ReadTrainingLog(dir / ModelFiles::kTrainingLog);
  return parts;
}

}  // namespace infostat::internal

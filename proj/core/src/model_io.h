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

#ifndef INFOSTAT_SRC_MODEL_IO_H_
#define INFOSTAT_SRC_MODEL_IO_H_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "infostat/classifier.h"
#include "infostat/encoder.h"
#include "infostat/spangen.h"

namespace infostat::internal {

// Parts shared by the mention and IS model artifacts.
struct ModelParts {
  std::unique_ptr<EncoderBackend> backend;
  LinearHead head;
  TrainConfig train_config;
  SpanGenConfig spangen;
  TrainingLog log;
};

void SaveModelParts(const std::string& task, const std::vector<std::string>& classes,
                    const EncoderBackend& backend, const LinearHead& head,
                    const TrainConfig& train_config, const SpanGenConfig& spangen,
                    const TrainingLog& log, const std::filesystem::path& dir);

// Throws DataError if the artifact is for another task or its class list
// differs from `classes`.
ModelParts LoadModelParts(const std::string& task,
                          const std::vector<std::string>& classes,
                          const std::filesystem::path& dir);

}  // namespace infostat::internal

#endif  // INFOSTAT_SRC_MODEL_IO_H_

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

#ifndef INFOSTAT_CONFIG_JSON_H_
#define INFOSTAT_CONFIG_JSON_H_

#include <string>

#include <nlohmann/json.hpp>

#include "infostat/classifier.h"
#include "infostat/encoder.h"
#include "infostat/spangen.h"

namespace infostat {

// JSON forms of the configuration structs. Parsers start from the given
// defaults, reject unknown keys and wrongly typed values with a ConfigError
// naming the field (prefixed by `path`).

nlohmann::json ToJson(const TrainConfig& config);
TrainConfig ParseTrainConfig(const nlohmann::json& j, const std::string& path,
                             TrainConfig defaults);

// The pruning lexicon is written in full.
nlohmann::json ToJson(const SpanGenConfig& config);
SpanGenConfig ParseSpanGenConfig(const nlohmann::json& j, const std::string& path,
                                 SpanGenConfig defaults);

nlohmann::json ToJson(const BackendSpec& spec);
BackendSpec ParseBackendSpec(const nlohmann::json& j, const std::string& path,
                             BackendSpec defaults);

}  // namespace infostat

#endif  // INFOSTAT_CONFIG_JSON_H_

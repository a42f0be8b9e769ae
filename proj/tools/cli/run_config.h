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

#ifndef INFOSTAT_TOOLS_RUN_CONFIG_H_
#define INFOSTAT_TOOLS_RUN_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "infostat/crossval.h"

namespace infostat::cli {

struct RunConfig {
  std::optional<std::filesystem::path> corpus;
  std::optional<std::filesystem::path> out_dir;
  PipelineConfig pipeline;
};

// Parses a run config object. Relative paths are resolved against
// `base_dir`. Unknown fields and bad values raise ConfigError naming the
// field.
RunConfig ParseRunConfig(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig LoadRunConfig(const std::filesystem::path& path);

// Full effective configuration; ParseRunConfig(ToJson(c)) == c.
nlohmann::json ToJson(const RunConfig& config);

// Throws ConfigError if a referenced path does not exist.
void CheckPathsExist(const RunConfig& config);

// FNV-1a 64 of a file's bytes as 16 hex digits.
std::string FileHash(const std::filesystem::path& path);

// Writes config.json and run.json (command, seeds, hashes of every other
// file under `dir`) into a run directory.
void FinishRunDirectory(const std::filesystem::path& dir, const std::string& command,
                        const nlohmann::json& config);

}  // namespace infostat::cli

#endif  // INFOSTAT_TOOLS_RUN_CONFIG_H_

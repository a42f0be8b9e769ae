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

#include "cli/run_config.h"

#include <fstream>
#include <iterator>
#include <set>

#include "infostat/config_json.h"
#include "infostat/errors.h"
#include "infostat/rng.h"

namespace infostat::cli {
namespace {

using nlohmann::json;

const std::set<std::string> kTopLevel = {"corpus",       "out_dir",  "backend",
                                         "mention_train", "is_train", "spangen",
                                         "pruning_lexicon_file", "eval"};
const std::set<std::string> kEval = {"folds", "fold_seed", "gold_mentions", "heuristic",
                                     "test_max_len"};

void CheckKeys(const json& j, const std::set<std::string>& known, const std::string& path) {
  if (!j.is_object()) throw ConfigError((path.empty() ? "config" : path) + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) {
      throw ConfigError((path.empty() ? key : path + "." + key) + ": unknown field");
    }
  }
}

template <typename T>
void Read(const json& j, const char* key, const std::string& path, T& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path + key + ": wrong type");
  }
}

std::filesystem::path ReadPath(const json& j, const char* key,
                               const std::filesystem::path& base) {
  std::string value;
  Read(j, key, "", value);
  if (value.empty()) throw ConfigError(std::string(key) + ": empty path");
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

std::string Hex(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

RunConfig ParseRunConfig(const json& j, const std::filesystem::path& base_dir) {
  CheckKeys(j, kTopLevel, "");
  RunConfig c;
  if (j.contains("corpus")) c.corpus = ReadPath(j, "corpus", base_dir);
  if (j.contains("out_dir")) c.out_dir = ReadPath(j, "out_dir", base_dir);
  PipelineConfig& p = c.pipeline;
  if (j.contains("backend")) p.backend = ParseBackendSpec(j["backend"], "backend", p.backend);
  if (j.contains("mention_train")) {
    p.mention_train = ParseTrainConfig(j["mention_train"], "mention_train", p.mention_train);
  }
  if (j.contains("is_train")) p.is_train = ParseTrainConfig(j["is_train"], "is_train", p.is_train);
  if (j.contains("spangen")) p.spangen = ParseSpanGenConfig(j["spangen"], "spangen", p.spangen);
  if (j.contains("pruning_lexicon_file")) {
    const auto path = ReadPath(j, "pruning_lexicon_file", base_dir);
    try {
      p.spangen.pruning_lexicon = LoadLexicon(path);
    } catch (const DataError& e) {
      throw ConfigError(std::string("pruning_lexicon_file: ") + e.what());
    }
  }
  if (j.contains("eval")) {
    const json& e = j["eval"];
    CheckKeys(e, kEval, "eval");
    Read(e, "folds", "eval.", p.folds);
    Read(e, "fold_seed", "eval.", p.fold_seed);
    Read(e, "gold_mentions", "eval.", p.gold_mentions);
    Read(e, "heuristic", "eval.", p.heuristic);
    if (auto it = e.find("test_max_len"); it != e.end() && !it->is_null()) {
      int v = 0;
      Read(e, "test_max_len", "eval.", v);
      if (v < 1) throw ConfigError("eval.test_max_len: must be >= 1");
      p.test_max_len = v;
    }
    if (p.folds < 2) throw ConfigError("eval.folds: must be >= 2");
  }
  return c;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return ParseRunConfig(j, path.parent_path());
}

json ToJson(const RunConfig& c) {
  const PipelineConfig& p = c.pipeline;
  json j = {{"backend", infostat::ToJson(p.backend)},
            {"mention_train", infostat::ToJson(p.mention_train)},
            {"is_train", infostat::ToJson(p.is_train)},
            {"spangen", infostat::ToJson(p.spangen)},
            {"eval",
             {{"folds", p.folds},
              {"fold_seed", p.fold_seed},
              {"gold_mentions", p.gold_mentions},
              {"heuristic", p.heuristic},
              {"test_max_len", p.test_max_len ? json(*p.test_max_len) : json(nullptr)}}}};
  if (c.corpus) j["corpus"] = c.corpus->string();
  if (c.out_dir) j["out_dir"] = c.out_dir->string();
  return j;
}

void CheckPathsExist(const RunConfig& c) {
  if (c.corpus && !std::filesystem::exists(*c.corpus)) {
    throw ConfigError("corpus: " + c.corpus->string() + " does not exist");
  }
}

std::string FileHash(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return Hex(Fnv1a64(bytes.data(), bytes.size()));
}

void FinishRunDirectory(const std::filesystem::path& dir, const std::string& command,
                        const json& config) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "config.json", std::ios::trunc);
    if (!out) throw DataError("cannot write " + (dir / "config.json").string());
    out << config.dump(1) << '\n';
  }
  std::set<std::string> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string rel = std::filesystem::relative(entry.path(), dir).generic_string();
    if (rel != "run.json") files.insert(rel);
  }
  json hashes = json::object();
  for (const std::string& rel : files) hashes[rel] = FileHash(dir / rel);
  json seeds = json::object();
  if (config.contains("backend")) seeds["backend"] = config["backend"].value("seed", 0ULL);
  if (config.contains("mention_train")) seeds["mention_train"] = config["mention_train"].value("seed", 0ULL);
  if (config.contains("is_train")) seeds["is_train"] = config["is_train"].value("seed", 0ULL);
  if (config.contains("eval")) seeds["fold_seed"] = config["eval"].value("fold_seed", 0ULL);
  const json run = {{"command", command}, {"seeds", seeds}, {"artifacts", hashes}};
  std::ofstream out(dir / "run.json", std::ios::trunc);
  if (!out) throw DataError("cannot write " + (dir / "run.json").string());
  out << run.dump(1) << '\n';
}

}  // namespace infostat::cli

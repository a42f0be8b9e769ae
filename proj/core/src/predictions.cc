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

#include "infostat/predictions.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "infostat/errors.h"

namespace infostat {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& source, int line, const std::string& field,
                       const std::string& what) {
  throw DataError(source + ":" + std::to_string(line) + ": field '" + field + "': " + what);
}

std::optional<double> OptionalScore(const json& rec, const char* key,
                                    const std::string& source, int line) {
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) Fail(source, line, key, "not a number");
  const double v = it->get<double>();
  if (!(v >= 0.0 && v <= 1.0)) Fail(source, line, key, "not a probability");
  return v;
}

int RequireInt(const json& rec, const char* key, const std::string& source, int line) {
  auto it = rec.find(key);
  if (it == rec.end()) Fail(source, line, key, "missing");
  if (!it->is_number_integer()) Fail(source, line, key, "not an integer");
  return it->get<int>();
}

}  // namespace

void WritePredictions(std::span<const Prediction> predictions, std::ostream& out) {
  for (const Prediction& p : predictions) {
    json rec = {{"doc_id", p.mention.doc_id},
                {"sent", p.mention.sent_index},
                {"start", p.mention.start},
                {"end", p.mention.end},
                {"surface", p.surface}};
    if (p.mention.is_category) rec["is"] = std::string(ToString(*p.mention.is_category));
    if (p.score_mention) rec["score_mention"] = *p.score_mention;
    if (p.score_is) rec["score_is"] = *p.score_is;
    out << rec.dump() << '\n';
  }
}

void SavePredictions(std::span<const Prediction> predictions,
                     const std::filesystem::path& path) {
  std::ostringstream buffer;
  WritePredictions(predictions, buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << buffer.str();
  if (!out) throw DataError("write failed: " + path.string());
}

std::vector<Prediction> ReadPredictions(std::istream& in, const std::string& source) {
  std::vector<Prediction> out;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(text);
    } catch (const json::exception& e) {
      Fail(source, line, "<record>", e.what());
    }
    if (!rec.is_object()) Fail(source, line, "<record>", "not an object");
    Prediction p;
    auto id = rec.find("doc_id");
    if (id == rec.end() || !id->is_string()) Fail(source, line, "doc_id", "missing or not a string");
    p.mention.doc_id = id->get<std::string>();
    p.mention.sent_index = RequireInt(rec, "sent", source, line);
    p.mention.start = RequireInt(rec, "start", source, line);
    p.mention.end = RequireInt(rec, "end", source, line);
    if (p.mention.start < 0 || p.mention.end < p.mention.start) {
      Fail(source, line, "start", "invalid span bounds");
    }
    auto surface = rec.find("surface");
    if (surface == rec.end() || !surface->is_string()) {
      Fail(source, line, "surface", "missing or not a string");
    }
    p.surface = surface->get<std::string>();
    if (auto is = rec.find("is"); is != rec.end() && !is->is_null()) {
      if (!is->is_string()) Fail(source, line, "is", "not a string");
      auto cat = ParseCategory(is->get<std::string>());
      if (!cat) Fail(source, line, "is", "unknown category '" + is->get<std::string>() + "'");
      p.mention.is_category = *cat;
    }
    p.score_mention = OptionalScore(rec, "score_mention", source, line);
    p.score_is = OptionalScore(rec, "score_is", source, line);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Prediction> LoadPredictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  return ReadPredictions(in, path.string());
}

std::vector<Mention> PredictionMentions(std::span<const Prediction> predictions) {
  std::vector<Mention> out;
  out.reserve(predictions.size());
  for (const Prediction& p : predictions) {
    Mention m = p.mention;
    m.score = p.score_is ? p.score_is : p.score_mention;
    out.push_back(std::move(m));
  }
  return out;
}

void CheckPredictionsAgainstCorpus(std::span<const Prediction> predictions,
                                   const Corpus& corpus) {
  std::map<std::string, const Document*> docs;
  for (const Document& d : corpus) docs[d.doc_id] = &d;
  for (const Prediction& p : predictions) {
    auto it = docs.find(p.mention.doc_id);
    if (it == docs.end()) {
      throw DataError("prediction for unknown document '" + p.mention.doc_id + "'");
    }
    CheckMentionInDocument(p.mention, *it->second);
    const std::string expected =
        Surface(it->second->sentences[p.mention.sent_index], p.mention.start, p.mention.end);
    if (expected != p.surface) {
      throw DataError(p.mention.doc_id + ":" + std::to_string(p.mention.sent_index) + ":" +
                      std::to_string(p.mention.start) + "-" + std::to_string(p.mention.end) +
                      ": surface '" + p.surface + "' does not match corpus text '" +
                      expected + "'");
    }
  }
}

std::vector<Prediction> PredictDocument(const Document& document,
                                        const MentionModel* mention_model,
                                        const ISModel* is_model,
                                        const PredictOptions& options) {
  std::vector<Mention> mentions;
  std::vector<std::optional<double>> mention_scores;
  if (options.mode == PredictMode::kGoldMentions) {
    if (!is_model) throw ConfigError("gold-mention prediction needs an IS model");
    mentions = document.gold_mentions;
    std::sort(mentions.begin(), mentions.end(), DocumentOrderLess);
    for (Mention& m : mentions) {
      m.is_category.reset();
      m.score.reset();
      m.subtype.reset();
    }
    mention_scores.assign(mentions.size(), std::nullopt);
  } else {
    if (!mention_model) throw ConfigError("end-to-end prediction needs a mention model");
    mentions = PredictMentions(*mention_model, document, options.heuristic,
                               options.test_max_len);
    for (const Mention& m : mentions) mention_scores.push_back(m.score);
  }
  std::vector<std::optional<double>> is_scores(mentions.size());
  if (is_model) {
    mentions = AssignIs(*is_model, document, mentions);
    for (size_t i = 0; i < mentions.size(); ++i) is_scores[i] = mentions[i].score;
  }
  std::vector<Prediction> out;
  out.reserve(mentions.size());
  for (size_t i = 0; i < mentions.size(); ++i) {
    Prediction p;
    p.mention = mentions[i];
    p.mention.score.reset();
    p.surface = Surface(document.sentences[p.mention.sent_index], p.mention.start,
                        p.mention.end);
    p.score_mention = mention_scores[i];
    p.score_is = is_scores[i];
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace infostat

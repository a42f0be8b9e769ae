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

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "infostat/corpus.h"
#include "infostat/errors.h"

namespace infostat {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& source, int line,
                       const std::string& field, const std::string& what) {
  throw DataError(source + ":" + std::to_string(line) + ": field '" + field +
                  "': " + what);
}

const json& Require(const json& obj, const char* key, const std::string& source,
                    int line, const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(source, line, prefix + key, "missing");
  return *it;
}

int RequireInt(const json& obj, const char* key, const std::string& source,
               int line, const std::string& prefix) {
  const json& v = Require(obj, key, source, line, prefix);
  if (!v.is_number_integer()) Fail(source, line, prefix + key, "not an integer");
  return v.get<int>();
}

Document ParseRecord(const json& rec, const std::string& source, int line) {
  if (!rec.is_object()) Fail(source, line, "<record>", "not an object");
  Document doc;
  const json& id = Require(rec, "doc_id", source, line, "");
  if (!id.is_string() || id.get<std::string>().empty()) {
    Fail(source, line, "doc_id", "not a non-empty string");
  }
  doc.doc_id = id.get<std::string>();

  const json& sents = Require(rec, "sentences", source, line, "");
  if (!sents.is_array()) Fail(source, line, "sentences", "not an array");
  for (size_t i = 0; i < sents.size(); ++i) {
    const std::string field = "sentences[" + std::to_string(i) + "]";
    if (!sents[i].is_array() || sents[i].empty()) {
      Fail(source, line, field, "not a non-empty array of tokens");
    }
    std::vector<std::string> words;
    for (size_t j = 0; j < sents[i].size(); ++j) {
      const json& tok = sents[i][j];
      if (!tok.is_string() || tok.get<std::string>().empty()) {
        Fail(source, line, field + "[" + std::to_string(j) + "]",
             "not a non-empty string");
      }
      words.push_back(tok.get<std::string>());
    }
    doc.sentences.push_back(MakeSentence(doc.doc_id, static_cast<int>(i), words));
  }

  if (auto it = rec.find("mentions"); it != rec.end()) {
    if (!it->is_array()) Fail(source, line, "mentions", "not an array");
    for (size_t i = 0; i < it->size(); ++i) {
      const json& m = (*it)[i];
      const std::string prefix = "mentions[" + std::to_string(i) + "].";
      if (!m.is_object()) Fail(source, line, prefix, "not an object");
      Mention mention;
      mention.doc_id = doc.doc_id;
      mention.sent_index = RequireInt(m, "sent", source, line, prefix);
      mention.start = RequireInt(m, "start", source, line, prefix);
      mention.end = RequireInt(m, "end", source, line, prefix);
      if (auto is = m.find("is"); is != m.end() && !is->is_null()) {
        if (!is->is_string()) Fail(source, line, prefix + "is", "not a string");
        auto cat = ParseCategory(is->get<std::string>());
        if (!cat) {
          Fail(source, line, prefix + "is",
               "unknown category '" + is->get<std::string>() + "'");
        }
        mention.is_category = *cat;
      }
      if (auto st = m.find("subtype"); st != m.end() && !st->is_null()) {
        if (!st->is_string()) {
          Fail(source, line, prefix + "subtype", "not a string");
        }
        mention.subtype = st->get<std::string>();
      }
      if (auto sc = m.find("score"); sc != m.end() && !sc->is_null()) {
        if (!sc->is_number()) Fail(source, line, prefix + "score", "not a number");
        mention.score = sc->get<double>();
      }
      doc.gold_mentions.push_back(std::move(mention));
    }
  }

  if (auto it = rec.find("metadata"); it != rec.end() && !it->is_null()) {
    if (!it->is_object()) Fail(source, line, "metadata", "not an object");
    for (auto& [key, value] : it->items()) {
      if (!value.is_string()) {
        Fail(source, line, "metadata." + key, "not a string");
      }
      doc.metadata[key] = value.get<std::string>();
    }
  }

  try {
    doc.Validate();
  } catch (const DataError& e) {
    throw DataError(source + ":" + std::to_string(line) + ": " + e.what());
  }
  return doc;
}

json ToJson(const Document& doc) {
  json rec = json::object();
  rec["doc_id"] = doc.doc_id;
  json sents = json::array();
  for (const Sentence& s : doc.sentences) sents.push_back(s.Words());
  rec["sentences"] = std::move(sents);
  json mentions = json::array();
  for (const Mention& m : doc.gold_mentions) {
    json jm = {{"sent", m.sent_index}, {"start", m.start}, {"end", m.end}};
    if (m.is_category) jm["is"] = std::string(ToString(*m.is_category));
    if (m.subtype) jm["subtype"] = *m.subtype;
    if (m.score) jm["score"] = *m.score;
    mentions.push_back(std::move(jm));
  }
  rec["mentions"] = std::move(mentions);
  rec["metadata"] = doc.metadata;
  return rec;
}

}  // namespace

Corpus ReadCanonical(std::istream& in, const std::string& source_name) {
  Corpus corpus;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(text);
    } catch (const json::parse_error& e) {
      Fail(source_name, line, "<record>", std::string("invalid JSON: ") + e.what());
    }
    corpus.push_back(ParseRecord(rec, source_name, line));
  }
  return corpus;
}

Corpus LoadCanonical(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file " + path.string());
  return ReadCanonical(in, path.string());
}

void WriteCanonical(const Corpus& corpus, std::ostream& out) {
  for (const Document& doc : corpus) {
    doc.Validate();
    out << ToJson(doc).dump() << '\n';
  }
}

void SaveCanonical(const Corpus& corpus, const std::filesystem::path& path) {
  std::ostringstream buffer;
  WriteCanonical(corpus, buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write corpus file " + path.string());
  out << buffer.str();
  if (!out.flush()) throw DataError("write failed for " + path.string());
}

}  // namespace infostat

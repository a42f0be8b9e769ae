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

// Adapters from the license-gated release formats to the canonical corpus.

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "infostat/corpus.h"
#include "infostat/errors.h"

namespace infostat {
namespace {

namespace fs = std::filesystem;

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Collapses whitespace runs to one space and trims.
std::string NormalizeSpace(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending = !out.empty();
    } else {
      if (pending) out.push_back(' ');
      pending = false;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) fields.push_back(field);
  return fields;
}

std::vector<std::string> SplitWhitespace(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string f;
  while (in >> f) fields.push_back(f);
  return fields;
}

int ParseIndex(const std::string& text, const std::string& context) {
  try {
    size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw DataError(context + ": expected an integer, got '" + text + "'");
  }
}

void RequireDirectory(const fs::path& dir, const char* what) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw DataError(std::string(what) + " directory not found: " + dir.string());
  }
}

// Files under root (recursive) whose name ends with suffix, sorted.
std::vector<fs::path> FindFiles(const fs::path& root, std::string_view suffix) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && EndsWith(entry.path().filename().string(), suffix)) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string StripSuffix(const std::string& name, std::string_view suffix) {
  return name.substr(0, name.size() - suffix.size());
}

// Maps document-relative token indices to (sentence, local index) and keeps
// the character layout of the space-joined document text.
class TokenIndex {
 public:
  explicit TokenIndex(const Document& doc) {
    int offset = 0;
    for (const Sentence& s : doc.sentences) {
      for (const Token& t : s.tokens) {
        if (!locations_.empty()) ++offset;  // joining space
        locations_.push_back({s.sent_index, t.index});
        char_begin_[offset] = static_cast<int>(locations_.size()) - 1;
        offset += static_cast<int>(t.text.size());
        char_end_[offset] = static_cast<int>(locations_.size()) - 1;
      }
    }
  }

  int size() const { return static_cast<int>(locations_.size()); }
  std::pair<int, int> Locate(int doc_token) const { return locations_[doc_token]; }

  // Token range for [begin, end) character offsets, or nullopt when the
  // offsets do not fall on token boundaries.
  std::optional<std::pair<int, int>> FromChars(int begin, int end) const {
    auto b = char_begin_.find(begin);
    auto e = char_end_.find(end);
    if (b == char_begin_.end() || e == char_end_.end()) return std::nullopt;
    return std::make_pair(b->second, e->second);
  }

 private:
  std::vector<std::pair<int, int>> locations_;
  std::map<int, int> char_begin_;
  std::map<int, int> char_end_;
};

// Resolves a document-relative inclusive token range to a mention, checking
// the sentence boundary and, when given, the surface string.
Mention ResolveDocumentSpan(const Document& doc, const TokenIndex& index,
                            int first, int last, const std::string& surface,
                            const std::string& annotation_id) {
  if (first < 0 || last < first || last >= index.size()) {
    throw DataError(doc.doc_id + ": annotation " + annotation_id +
                    " has token range " + std::to_string(first) + ".." +
                    std::to_string(last) + " outside the document (" +
                    std::to_string(index.size()) + " tokens)");
  }
  auto [s0, t0] = index.Locate(first);
  auto [s1, t1] = index.Locate(last);
  if (s0 != s1) {
    throw DataError(doc.doc_id + ": annotation " + annotation_id +
                    " crosses a sentence boundary (sentences " +
                    std::to_string(s0) + " and " + std::to_string(s1) + ")");
  }
  if (!surface.empty()) {
    const std::string actual = Surface(doc.sentences[s0], t0, t1);
    if (NormalizeSpace(actual) != NormalizeSpace(surface)) {
      throw DataError(doc.doc_id + ": annotation " + annotation_id +
                      " surface '" + surface + "' does not match base text '" +
                      actual + "'");
    }
  }
  Mention m;
  m.doc_id = doc.doc_id;
  m.sent_index = s0;
  m.start = t0;
  m.end = t1;
  return m;
}

Document MakeDocument(const std::string& doc_id,
                      const std::vector<std::vector<std::string>>& sentences,
                      const std::string& source) {
  Document doc;
  doc.doc_id = doc_id;
  for (const auto& words : sentences) {
    if (words.empty()) continue;
    doc.sentences.push_back(
        MakeSentence(doc_id, static_cast<int>(doc.sentences.size()), words));
  }
  doc.metadata["source"] = source;
  return doc;
}

void FinishDocument(Document& doc) {
  std::sort(doc.gold_mentions.begin(), doc.gold_mentions.end(),
            DocumentOrderLess);
  doc.Validate();
}

// ------------------------------- ISNotes ----------------------------------

std::optional<ISCategory> MapIsnotesLabel(std::string status,
                                          std::string subtype) {
  status = AsciiLower(Trim(status));
  subtype = AsciiLower(Trim(subtype));
  if (auto direct = ParseCategory(status)) return direct;
  if (status == "old") return ISCategory::kOld;
  if (status == "new") return ISCategory::kNew;
  if (status != "mediated") return std::nullopt;
  if (subtype == "syntactic") return ISCategory::kMediatedSyntactic;
  if (subtype == "worldknowledge" || subtype == "knowledge" ||
      subtype == "world_knowledge" || subtype == "world-knowledge" ||
      subtype == "world knowledge") {
    return ISCategory::kMediatedWorldKnowledge;
  }
  if (subtype == "bridging") return ISCategory::kMediatedBridging;
  if (subtype == "comparative") return ISCategory::kMediatedComparative;
  if (subtype == "aggregate") return ISCategory::kMediatedAggregate;
  if (subtype == "func" || subtype == "function") {
    return ISCategory::kMediatedFunction;
  }
  return std::nullopt;
}

// "word_3..word_5" or "word_3"; returns 0-based inclusive indices.
std::pair<int, int> ParseMmaxSpan(const std::string& span,
                                  const std::string& context) {
  static const std::regex kRange(R"(word_(\d+)(?:\.\.word_(\d+))?)");
  std::smatch m;
  if (!std::regex_match(span, m, kRange)) {
    throw DataError(context + ": unsupported span '" + span +
                    "' (discontinuous or malformed)");
  }
  const int first = std::stoi(m[1].str()) - 1;
  const int last = m[2].matched ? std::stoi(m[2].str()) - 1 : first;
  return {first, last};
}

std::string XmlAttr(const boost::property_tree::ptree& node, const char* name) {
  return node.get<std::string>(std::string("<xmlattr>.") + name, "");
}

void CheckMmaxWords(const Document& doc, const fs::path& words_file) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_xml(words_file.string(), tree);
  } catch (const pt::xml_parser_error& e) {
    throw DataError(words_file.string() + ": " + e.what());
  }
  std::vector<std::string> base;
  for (const Sentence& s : doc.sentences) {
    for (const Token& t : s.tokens) base.push_back(t.text);
  }
  size_t i = 0;
  for (const auto& [tag, node] : tree.get_child("words", pt::ptree())) {
    if (tag != "word") continue;
    const std::string id = XmlAttr(node, "id");
    const std::string text = NormalizeSpace(node.get_value<std::string>());
    if (i >= base.size()) {
      throw DataError(doc.doc_id + ": words file has more tokens than the ONF "
                      "base text (first extra: " + id + ")");
    }
    if (!text.empty() && text != base[i]) {
      throw DataError(doc.doc_id + ": word " + id + " '" + text +
                      "' does not match ONF token '" + base[i] + "'");
    }
    ++i;
  }
  if (i != base.size()) {
    throw DataError(doc.doc_id + ": words file has " + std::to_string(i) +
                    " tokens, ONF base text has " + std::to_string(base.size()));
  }
}

// ----------------------------- BASHI/SciCorp -------------------------------

std::vector<std::vector<std::string>> ParseColumnTokens(std::istream& in,
                                                        const std::string& source) {
  std::vector<std::vector<std::string>> sentences(1);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) {
      if (!sentences.back().empty()) sentences.emplace_back();
      continue;
    }
    if (line[0] == '#') continue;
    const auto fields = SplitWhitespace(line);
    if (fields.size() < 2) {
      throw DataError(source + ":" + std::to_string(lineno) +
                      ": expected '<index> <word>'");
    }
    const int idx = ParseIndex(fields[0], source + ":" + std::to_string(lineno));
    if (idx != static_cast<int>(sentences.back().size())) {
      throw DataError(source + ":" + std::to_string(lineno) + ": token index " +
                      fields[0] + " out of sequence");
    }
    sentences.back().push_back(fields[1]);
  }
  if (sentences.back().empty()) sentences.pop_back();
  return sentences;
}

}  // namespace

// --------------------------------- ONF ------------------------------------

OnfDocument ParseOnf(std::istream& in, const std::string& doc_id) {
  static const std::regex kLeaf(R"(^ {1,7}(\d+)\s+(\S+)\s*$)");
  static const std::regex kTreeLeaf(R"(\(([^\s()]+)\s+([^\s()]+)\))");
  OnfDocument out;
  out.doc_id = doc_id;

  enum class Section { kOther, kTree, kLeaves };
  Section section = Section::kOther;
  std::string tree_text;
  std::vector<std::string> leaves;

  auto finish = [&]() {
    if (leaves.empty()) return;
    std::vector<std::string> tags;
    for (auto it = std::sregex_iterator(tree_text.begin(), tree_text.end(), kTreeLeaf);
         it != std::sregex_iterator(); ++it) {
      tags.push_back((*it)[1].str());
    }
    if (!tags.empty() && tags.size() != leaves.size()) {
      throw DataError(doc_id + ": sentence " + std::to_string(out.sentences.size()) +
                      " has " + std::to_string(leaves.size()) + " leaves but " +
                      std::to_string(tags.size()) + " tree terminals");
    }
    std::vector<std::string> words;
    for (size_t i = 0; i < leaves.size(); ++i) {
      const bool trace = tags.empty() ? leaves[i][0] == '*' : tags[i] == "-NONE-";
      if (!trace) words.push_back(leaves[i]);
    }
    if (!words.empty()) out.sentences.push_back(std::move(words));
    leaves.clear();
    tree_text.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = Trim(line);
    const bool dashes = !trimmed.empty() &&
                        trimmed.find_first_not_of('-') == std::string::npos;
    if (dashes && trimmed.size() >= 20) {  // sentence separator
      finish();
      section = Section::kOther;
      continue;
    }
    if (!line.empty() && line[0] != ' ' && line[0] != '\t' && EndsWith(trimmed, ":")) {
      if (section == Section::kLeaves) finish();
      section = trimmed == "Tree:"     ? Section::kTree
                : trimmed == "Leaves:" ? Section::kLeaves
                                       : Section::kOther;
      continue;
    }
    if (dashes) continue;  // section underline
    if (section == Section::kTree) {
      tree_text += line;
      tree_text.push_back('\n');
    } else if (section == Section::kLeaves) {
      std::smatch m;
      if (std::regex_match(line, m, kLeaf)) {
        const int idx = std::stoi(m[1].str());
        if (idx != static_cast<int>(leaves.size())) {
          throw DataError(doc_id + ": leaf index " + m[1].str() +
                          " out of sequence in sentence " +
                          std::to_string(out.sentences.size()));
        }
        leaves.push_back(m[2].str());
      }
    }
  }
  finish();
  return out;
}

std::vector<ConllDocument> ParseConll(std::istream& in,
                                      const std::string& source_name) {
  static const std::regex kBegin(R"(^#begin document \(([^)]*)\);?.*$)");
  std::vector<ConllDocument> docs;
  std::map<std::string, size_t> by_id;
  ConllDocument* current = nullptr;
  std::vector<std::string> sentence;

  auto doc_for = [&](const std::string& path) -> ConllDocument* {
    const std::string id = fs::path(path).filename().string();
    auto [it, inserted] = by_id.emplace(id, docs.size());
    if (inserted) docs.push_back({id, {}});
    return &docs[it->second];
  };
  auto flush = [&]() {
    if (!sentence.empty() && current != nullptr) {
      current->sentences.push_back(std::move(sentence));
    }
    sentence.clear();
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (std::regex_match(line, m, kBegin)) {
      flush();
      current = doc_for(m[1].str());
      continue;
    }
    if (line.rfind("#end document", 0) == 0) {
      flush();
      current = nullptr;
      continue;
    }
    if (Trim(line).empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    const auto fields = SplitWhitespace(line);
    const std::string where = source_name + ":" + std::to_string(lineno);
    if (fields.size() < 4) {
      throw DataError(where + ": expected at least 4 columns");
    }
    if (current == nullptr) current = doc_for(fields[0]);
    const int idx = ParseIndex(fields[2], where);
    if (idx != static_cast<int>(sentence.size())) {
      throw DataError(where + ": word number " + fields[2] + " out of sequence");
    }
    sentence.push_back(fields[3]);
  }
  flush();
  return docs;
}

Corpus LoadIsnotes(const fs::path& onf_root, const fs::path& isnotes_root) {
  namespace pt = boost::property_tree;
  RequireDirectory(onf_root, "ONF");
  RequireDirectory(isnotes_root, "ISNotes");

  constexpr std::string_view kMarkableSuffix = "_entity_level.xml";
  constexpr std::string_view kWordsSuffix = "_words.xml";
  const auto markable_files = FindFiles(isnotes_root, kMarkableSuffix);
  if (markable_files.empty()) {
    throw DataError("no ISNotes markable files (*_entity_level.xml) under " +
                    isnotes_root.string());
  }
  std::map<std::string, fs::path> onf_files;
  for (const auto& p : FindFiles(onf_root, ".onf")) {
    onf_files[p.stem().string()] = p;
  }
  std::map<std::string, fs::path> words_files;
  for (const auto& p : FindFiles(isnotes_root, kWordsSuffix)) {
    words_files[StripSuffix(p.filename().string(), kWordsSuffix)] = p;
  }

  std::vector<std::string> missing;
  for (const auto& f : markable_files) {
    const std::string id = StripSuffix(f.filename().string(), kMarkableSuffix);
    if (!onf_files.count(id)) missing.push_back(id);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& id : missing) list += (list.empty() ? "" : ", ") + id;
    throw DataError("missing ONF documents for annotated ISNotes texts: " + list);
  }

  Corpus corpus;
  for (const auto& markable_file : markable_files) {
    const std::string id =
        StripSuffix(markable_file.filename().string(), kMarkableSuffix);
    std::ifstream onf_in(onf_files[id]);
    if (!onf_in) throw DataError("cannot open " + onf_files[id].string());
    const OnfDocument onf = ParseOnf(onf_in, id);
    Document doc = MakeDocument(id, onf.sentences, "isnotes");
    doc.metadata["genre"] = "news";
    if (auto w = words_files.find(id); w != words_files.end()) {
      CheckMmaxWords(doc, w->second);
    }
    const TokenIndex index(doc);

    pt::ptree tree;
    try {
      pt::read_xml(markable_file.string(), tree);
    } catch (const pt::xml_parser_error& e) {
      throw DataError(markable_file.string() + ": " + e.what());
    }
    for (const auto& [tag, node] : tree.get_child("markables", pt::ptree())) {
      if (tag != "markable") continue;
      std::string mid = XmlAttr(node, "id");
      if (mid.empty()) mid = "<unnamed>";
      const std::string context = id + ": markable " + mid;
      const std::string status = XmlAttr(node, "information_status");
      if (status.empty()) {
        throw DataError(context + " has no information_status");
      }
      std::string subtype = XmlAttr(node, "mediated_type");
      for (const char* alt : {"mediated_subtype", "mediatedtype", "subtype"}) {
        if (subtype.empty()) subtype = XmlAttr(node, alt);
      }
      const auto category = MapIsnotesLabel(status, subtype);
      if (!category) {
        throw DataError(context + " has unknown IS label '" + status + "/" +
                        subtype + "'");
      }
      const auto [first, last] = ParseMmaxSpan(XmlAttr(node, "span"), context);
      Mention m = ResolveDocumentSpan(doc, index, first, last, "", mid);
      m.is_category = category;
      doc.gold_mentions.push_back(std::move(m));
    }
    FinishDocument(doc);
    corpus.push_back(std::move(doc));
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
  return corpus;
}

Corpus LoadBashi(const fs::path& conll_root, const fs::path& bashi_root) {
  RequireDirectory(conll_root, "CoNLL");
  RequireDirectory(bashi_root, "BASHI");

  struct Row {
    std::string anaphor_id, unit, surface, type;
    int start = 0, end = 0;
  };
  std::map<std::string, std::vector<Row>> rows;
  const auto files = FindFiles(bashi_root, ".tsv");
  for (const auto& file : files) {
    std::ifstream in(file);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (Trim(line).empty() || line[0] == '#') continue;
      const auto f = SplitTabs(line);
      const std::string where = file.string() + ":" + std::to_string(lineno);
      if (f.size() < 7) {
        throw DataError(where + ": expected 7 tab-separated fields "
                        "(doc_id, anaphor_id, unit, start, end, surface, type)");
      }
      Row r{f[1], f[2], f[5], f[6], ParseIndex(f[3], where), ParseIndex(f[4], where)};
      if (r.unit != "tok" && r.unit != "char") {
        throw DataError(where + ": unit must be 'tok' or 'char'");
      }
      rows[f[0]].push_back(std::move(r));
    }
  }
  if (rows.empty()) {
    throw DataError("no BASHI anaphor annotations (*.tsv) under " +
                    bashi_root.string());
  }

  std::map<std::string, ConllDocument> base;
  for (const auto& file : FindFiles(conll_root, "conll")) {
    std::ifstream in(file);
    for (auto& d : ParseConll(in, file.string())) {
      if (!rows.count(d.doc_id)) continue;
      auto& slot = base[d.doc_id];
      slot.doc_id = d.doc_id;
      for (auto& s : d.sentences) slot.sentences.push_back(std::move(s));
    }
  }
  std::string missing;
  for (const auto& [id, _] : rows) {
    if (!base.count(id)) missing += (missing.empty() ? "" : ", ") + id;
  }
  if (!missing.empty()) {
    throw DataError("missing CoNLL documents for annotated BASHI texts: " + missing);
  }

  Corpus corpus;
  for (const auto& [id, doc_rows] : rows) {
    Document doc = MakeDocument(id, base[id].sentences, "bashi");
    doc.metadata["genre"] = "news";
    const TokenIndex index(doc);
    for (const Row& r : doc_rows) {
      int first = r.start, last = r.end;
      if (r.unit == "char") {
        auto range = index.FromChars(r.start, r.end);
        if (!range) {
          throw DataError(id + ": annotation " + r.anaphor_id +
                          " character offsets " + std::to_string(r.start) + "-" +
                          std::to_string(r.end) + " do not align with tokens");
        }
        std::tie(first, last) = *range;
      }
      Mention m = ResolveDocumentSpan(doc, index, first, last, r.surface, r.anaphor_id);
      if (!r.type.empty() && r.type != "-") m.subtype = r.type;
      doc.gold_mentions.push_back(std::move(m));
    }
    FinishDocument(doc);
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

Corpus LoadScicorp(const fs::path& root) {
  RequireDirectory(root, "SciCorp");
  const auto token_files = FindFiles(root, ".conll");
  if (token_files.empty()) {
    throw DataError("no SciCorp token files (*.conll) under " + root.string());
  }
  Corpus corpus;
  for (const auto& file : token_files) {
    const std::string id = file.stem().string();
    std::ifstream in(file);
    Document doc = MakeDocument(id, ParseColumnTokens(in, file.string()), "scicorp");
    const fs::path genre_dir = file.parent_path();
    if (genre_dir != root) doc.metadata["genre"] = genre_dir.filename().string();

    const fs::path anaphors = file.parent_path() / (id + ".bridging.tsv");
    if (fs::exists(anaphors)) {
      std::ifstream ain(anaphors);
      std::string line;
      int lineno = 0;
      while (std::getline(ain, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (Trim(line).empty() || line[0] == '#') continue;
        const auto f = SplitTabs(line);
        const std::string where = anaphors.string() + ":" + std::to_string(lineno);
        if (f.size() < 5) {
          throw DataError(where + ": expected fields (anaphor_id, sent, start, "
                          "end, surface[, subtype])");
        }
        const int sent = ParseIndex(f[1], where);
        const int start = ParseIndex(f[2], where);
        const int end = ParseIndex(f[3], where);
        if (sent < 0 || sent >= static_cast<int>(doc.sentences.size())) {
          throw DataError(id + ": annotation " + f[0] + " references sentence " +
                          f[1] + " outside the document");
        }
        const Sentence& s = doc.sentences[sent];
        if (start < 0 || end < start || end >= s.size()) {
          throw DataError(id + ": annotation " + f[0] + " token range " + f[2] +
                          ".." + f[3] + " outside sentence " + f[1]);
        }
        if (NormalizeSpace(Surface(s, start, end)) != NormalizeSpace(f[4])) {
          throw DataError(id + ": annotation " + f[0] + " surface '" + f[4] +
                          "' does not match base text '" + Surface(s, start, end) +
                          "'");
        }
        Mention m;
        m.doc_id = id;
        m.sent_index = sent;
        m.start = start;
        m.end = end;
        if (f.size() > 5 && !Trim(f[5]).empty() && Trim(f[5]) != "-") {
          m.subtype = Trim(f[5]);
        }
        doc.gold_mentions.push_back(std::move(m));
      }
    }
    FinishDocument(doc);
    corpus.push_back(std::move(doc));
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
  for (size_t i = 1; i < corpus.size(); ++i) {
    if (corpus[i].doc_id == corpus[i - 1].doc_id) {
      throw DataError("duplicate SciCorp document id " + corpus[i].doc_id);
    }
  }
  return corpus;
}

}  // namespace infostat

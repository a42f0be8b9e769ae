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

#include "infostat/bridging.h"

#include <map>

#include "infostat/errors.h"
#include "infostat/spangen.h"

namespace infostat {
namespace {

ISCategory Label(const Mention& m) {
  if (!m.is_category) {
    throw DataError("mention " + m.doc_id + ":" + std::to_string(m.sent_index) + ":" +
                    std::to_string(m.start) + "-" + std::to_string(m.end) +
                    " has no information status label");
  }
  return *m.is_category;
}

class DocumentIndex {
 public:
  explicit DocumentIndex(const Corpus& corpus) {
    for (const Document& d : corpus) docs_[d.doc_id] = &d;
  }

  std::string FirstToken(const Mention& m) const {
    auto it = docs_.find(m.doc_id);
    if (it == docs_.end()) throw DataError("unknown document '" + m.doc_id + "'");
    CheckMentionInDocument(m, *it->second);
    return AsciiLower(it->second->sentences[m.sent_index].tokens[m.start].text);
  }

 private:
  std::map<std::string, const Document*> docs_;
};

}  // namespace

std::vector<AnaphorPrediction> BashiAnaphors(std::span<const Mention> predictions,
                                             const Corpus& corpus) {
  const DocumentIndex index(corpus);
  std::vector<AnaphorPrediction> out;
  for (const Mention& m : predictions) {
    const ISCategory c = Label(m);
    if (c == ISCategory::kMediatedBridging || c == ISCategory::kMediatedComparative) {
      index.FirstToken(m);
      out.push_back({m, c});
    }
  }
  return out;
}

const std::set<std::string>& DefaultDeterminers() {
  static const std::set<std::string> kSet = {"the", "this", "that", "these", "those"};
  return kSet;
}

std::set<std::string> LoadDeterminers(const std::filesystem::path& path) {
  return LoadLexicon(path);
}

std::vector<AnaphorPrediction> ScicorpAnaphors(std::span<const Mention> predictions,
                                               const Corpus& corpus,
                                               const std::set<std::string>& determiners) {
  if (determiners.empty()) throw ConfigError("determiner set is empty");
  const DocumentIndex index(corpus);
  std::vector<AnaphorPrediction> out;
  for (const Mention& m : predictions) {
    if (Label(m) != ISCategory::kMediatedBridging) continue;
    if (determiners.count(index.FirstToken(m))) {
      out.push_back({m, ISCategory::kMediatedBridging});
    }
  }
  return out;
}

const std::set<std::string>& PossessivePronouns() {
  static const std::set<std::string> kSet = {"my",  "your", "his",  "her",
                                             "its", "our",  "their"};
  return kSet;
}

std::vector<Mention> FilterContainingInferrable(std::span<const Mention> gold_anaphors,
                                                const Corpus& corpus,
                                                const WarningSink& warn) {
  bool tagged = false;
  for (const Mention& m : gold_anaphors) tagged = tagged || m.subtype.has_value();
  std::vector<Mention> out;
  if (tagged) {
    for (const Mention& m : gold_anaphors) {
      if (m.subtype != kContainingInferrable) out.push_back(m);
    }
    return out;
  }
  const DocumentIndex index(corpus);
  int dropped = 0;
  for (const Mention& m : gold_anaphors) {
    if (PossessivePronouns().count(index.FirstToken(m))) {
      ++dropped;
    } else {
      out.push_back(m);
    }
  }
  if (!gold_anaphors.empty() && warn) {
    warn("WARNING: gold anaphors carry no subtype tags; containing inferrables were "
         "approximated by a leading possessive pronoun (" +
         std::to_string(dropped) + " of " + std::to_string(gold_anaphors.size()) +
         " removed)");
  }
  return out;
}

std::vector<Mention> AnaphorMentions(std::span<const AnaphorPrediction> predicted) {
  std::vector<Mention> out;
  out.reserve(predicted.size());
  for (const AnaphorPrediction& p : predicted) out.push_back(p.mention);
  return out;
}

PRF EvalBridging(std::span<const Mention> gold_anaphors,
                 std::span<const AnaphorPrediction> predicted) {
  const auto pred = AnaphorMentions(predicted);
  return EvalMentions(gold_anaphors, pred);
}

}  // namespace infostat

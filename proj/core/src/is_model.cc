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

#include "infostat/is_model.h"

#include <algorithm>

#include "infostat/errors.h"
#include "model_io.h"

namespace infostat {
namespace {

constexpr char kTask[] = "is";

const std::vector<std::string>& IsClasses() {
  static const std::vector<std::string> classes = [] {
    std::vector<std::string> out;
    for (ISCategory c : kAllCategories) out.emplace_back(ToString(c));
    return out;
  }();
  return classes;
}

struct TrainingMention {
  const std::vector<std::string>* words;
  const Mention* mention;
  bool seen;
};

}  // namespace

ISModel TrainIsAssigner(const Corpus& train_docs, const TrainConfig& config,
                        std::unique_ptr<EncoderBackend> backend,
                        const SpanGenConfig& spangen) {
  config.Validate();
  spangen.Validate();
  if (!backend) throw ConfigError("no encoder backend given");
  CheckSpecialTokensAbsent(spangen, train_docs);

  std::vector<std::vector<std::vector<std::string>>> words(train_docs.size());
  std::vector<TrainingMention> instances;
  std::vector<int> labels;
  for (size_t d = 0; d < train_docs.size(); ++d) {
    const Document& doc = train_docs[d];
    doc.Validate();
    for (const Sentence& s : doc.sentences) words[d].push_back(s.Words());
    const auto seen = SeenFlags(doc, doc.gold_mentions);
    for (size_t i = 0; i < doc.gold_mentions.size(); ++i) {
      const Mention& m = doc.gold_mentions[i];
      if (!m.is_category) {
        throw DataError(doc.doc_id + ": gold mention (" + std::to_string(m.sent_index) +
                        "," + std::to_string(m.start) + "," + std::to_string(m.end) +
                        ") has no information status label");
      }
      instances.push_back({&words[d][m.sent_index], &m, seen[i]});
      labels.push_back(ClassIndex(*m.is_category));
    }
  }
  if (instances.empty()) throw DataError("no gold mentions in the training documents");

  ISModel model;
  model.backend = std::move(backend);
  model.head = LinearHead(2 * model.backend->hidden_dim(), kNumCategories, config.seed);
  model.train_config = config;
  model.spangen = spangen;
  model.log = TrainClassifier(
      *model.backend, model.head, instances.size(),
      [&](size_t i) {
        return BuildIsInput(*instances[i].words, *instances[i].mention,
                            instances[i].seen, spangen);
      },
      labels, config);
  return model;
}

std::vector<MarkedSequence> IsInputs(const ISModel& model, const Document& document,
                                     std::span<const Mention> mentions) {
  for (const Mention& m : mentions) CheckMentionInDocument(m, document);
  const auto seen = SeenFlags(document, mentions);
  const int budget = std::min(model.spangen.max_seq_len, model.backend->max_seq_len());
  const LengthFunction length = model.backend->length_function();
  std::vector<std::vector<std::string>> words;
  for (const Sentence& s : document.sentences) words.push_back(s.Words());
  std::vector<MarkedSequence> out;
  out.reserve(mentions.size());
  for (size_t i = 0; i < mentions.size(); ++i) {
    const Mention& m = mentions[i];
    out.push_back(Truncate(BuildIsInput(words[m.sent_index], m, seen[i], model.spangen),
                           budget, length));
  }
  return out;
}

std::vector<Vector> IsProbabilities(const ISModel& model, const Document& document,
                                    std::span<const Mention> mentions) {
  const auto inputs = IsInputs(model, document, mentions);
  return ClassProbabilities(*model.backend, model.head, inputs,
                            model.train_config.batch_size);
}

std::vector<Mention> AssignIs(const ISModel& model, const Document& document,
                              std::span<const Mention> mentions) {
  const auto probs = IsProbabilities(model, document, mentions);
  std::vector<Mention> out(mentions.begin(), mentions.end());
  for (size_t i = 0; i < out.size(); ++i) {
    const int best = Argmax(probs[i]);
    out[i].is_category = CategoryFromIndex(best);
    out[i].score = probs[i][best];
  }
  return out;
}

void SaveIsModel(const ISModel& model, const std::filesystem::path& dir) {
  internal::SaveModelParts(kTask, IsClasses(), *model.backend, model.head,
                           model.train_config, model.spangen, model.log, dir);
}

ISModel LoadIsModel(const std::filesystem::path& dir) {
  auto parts = internal::LoadModelParts(kTask, IsClasses(), dir);
  return {std::move(parts.backend), std::move(parts.head), parts.train_config,
          std::move(parts.spangen), std::move(parts.log)};
}

}  // namespace infostat

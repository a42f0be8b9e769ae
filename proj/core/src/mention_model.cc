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

#include "infostat/mention_model.h"

#include <algorithm>

#include "infostat/errors.h"
#include "model_io.h"

namespace infostat {
namespace {

constexpr char kTask[] = "mention";
const std::vector<std::string>& MentionClasses() {
  static const std::vector<std::string> classes = {"non-mention", "mention"};
  return classes;
}

struct TrainingSpan {
  const std::vector<std::string>* words;
  int start;
  int end;
};

int InferenceBudget(const MentionModel& model) {
  return std::min(model.spangen.max_seq_len, model.backend->max_seq_len());
}

// Scores already-built inputs; entries that cannot be truncated to the
// budget keep probability 0.
std::vector<double> ScoreInputs(const MentionModel& model,
                                std::vector<MarkedSequence> inputs) {
  const int budget = InferenceBudget(model);
  const LengthFunction length = model.backend->length_function();
  std::vector<double> scores(inputs.size(), 0.0);
  std::vector<MarkedSequence> fitted;
  std::vector<size_t> where;
  fitted.reserve(inputs.size());
  for (size_t i = 0; i < inputs.size(); ++i) {
    try {
      fitted.push_back(Truncate(inputs[i], budget, length));
      where.push_back(i);
    } catch (const SpanTooLongError&) {
    }
  }
  const auto probs = ClassProbabilities(*model.backend, model.head, fitted,
                                        model.train_config.batch_size);
  for (size_t i = 0; i < probs.size(); ++i) scores[where[i]] = probs[i][1];
  return scores;
}

}  // namespace

MentionModel TrainMentionExtractor(const Corpus& train_docs,
                                   const TrainConfig& config,
                                   std::unique_ptr<EncoderBackend> backend,
                                   const SpanGenConfig& spangen) {
  config.Validate();
  spangen.Validate();
  if (!backend) throw ConfigError("no encoder backend given");
  CheckSpecialTokensAbsent(spangen, train_docs);

  std::vector<std::vector<std::string>> words;
  for (const Document& d : train_docs) {
    d.Validate();
    for (const Sentence& s : d.sentences) words.push_back(s.Words());
  }
  std::vector<TrainingSpan> spans;
  std::vector<int> labels;
  size_t sentence_slot = 0;
  for (const Document& d : train_docs) {
    std::vector<std::vector<Mention>> by_sentence(d.sentences.size());
    for (const Mention& m : d.gold_mentions) by_sentence[m.sent_index].push_back(m);
    for (const Sentence& s : d.sentences) {
      const auto& sentence_words = words[sentence_slot++];
      for (const SpanCandidate& c :
           EnumerateTrainingSpans(s, by_sentence[s.sent_index], spangen)) {
        spans.push_back({&sentence_words, c.start, c.end});
        labels.push_back(c.label.value_or(false) ? 1 : 0);
      }
    }
  }
  if (std::find(labels.begin(), labels.end(), 1) == labels.end()) {
    throw DataError("no gold mention of at most " +
                    std::to_string(spangen.max_train_span_len) +
                    " words in the training documents");
  }

  MentionModel model;
  model.backend = std::move(backend);
  model.head = LinearHead(2 * model.backend->hidden_dim(), 2, config.seed);
  model.train_config = config;
  model.spangen = spangen;
  model.log = TrainClassifier(
      *model.backend, model.head, spans.size(),
      [&](size_t i) {
        return InsertMarkers(*spans[i].words, spans[i].start, spans[i].end, spangen);
      },
      labels, config);
  return model;
}

double ScoreSpan(const MentionModel& model, const Sentence& sentence, int start,
                 int end) {
  const auto words = sentence.Words();
  std::vector<MarkedSequence> inputs;
  inputs.push_back(InsertMarkers(words, start, end, model.spangen));
  return ScoreInputs(model, std::move(inputs))[0];
}

std::vector<Mention> PredictMentions(const MentionModel& model,
                                     const Document& document, bool heuristic_on,
                                     std::optional<int> test_max_len) {
  if (test_max_len && *test_max_len < 1) {
    throw ConfigError("test_max_len must be >= 1");
  }
  std::vector<Mention> out;
  for (const Sentence& s : document.sentences) {
    const auto words = s.Words();
    std::vector<SpanCandidate> candidates;
    for (const SpanCandidate& c : EnumerateInferenceSpans(s, heuristic_on, model.spangen)) {
      if (!test_max_len || c.length() <= *test_max_len) candidates.push_back(c);
    }
    std::vector<MarkedSequence> inputs;
    inputs.reserve(candidates.size());
    for (const SpanCandidate& c : candidates) {
      inputs.push_back(InsertMarkers(words, c.start, c.end, model.spangen));
    }
    const auto scores = ScoreInputs(model, std::move(inputs));
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (scores[i] > kMentionThreshold) {
        Mention m;
        m.doc_id = document.doc_id;
        m.sent_index = s.sent_index;
        m.start = candidates[i].start;
        m.end = candidates[i].end;
        m.score = scores[i];
        out.push_back(std::move(m));
      }
    }
  }
  std::sort(out.begin(), out.end(), DocumentOrderLess);
  return out;
}

void SaveMentionModel(const MentionModel& model, const std::filesystem::path& dir) {
  internal::SaveModelParts(kTask, MentionClasses(), *model.backend, model.head,
                           model.train_config, model.spangen, model.log, dir);
}

MentionModel LoadMentionModel(const std::filesystem::path& dir) {
  auto parts = internal::LoadModelParts(kTask, MentionClasses(), dir);
  return {std::move(parts.backend), std::move(parts.head), parts.train_config,
          std::move(parts.spangen), std::move(parts.log)};
}

}  // namespace infostat

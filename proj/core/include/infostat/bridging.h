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

#ifndef INFOSTAT_BRIDGING_H_
#define INFOSTAT_BRIDGING_H_

#include <filesystem>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "infostat/document.h"
#include "infostat/eval.h"

namespace infostat {

struct AnaphorPrediction {
  Mention mention;
  ISCategory source_category = ISCategory::kMediatedBridging;
};

// Subtype tag marking a containing inferrable in loaded gold anaphors.
inline constexpr char kContainingInferrable[] = "containing-inferrable";

// Predictions labeled mediated/bridging or mediated/comparative, in input
// order. Throws DataError for an unlabeled mention.
std::vector<AnaphorPrediction> BashiAnaphors(std::span<const Mention> predictions,
                                             const Corpus& corpus);

// {the, this, that, these, those}
const std::set<std::string>& DefaultDeterminers();
// Same file format as the pruning lexicon.
std::set<std::string> LoadDeterminers(const std::filesystem::path& path);

// Predictions labeled mediated/bridging whose first token, lowercased, is a
// determiner. Throws ConfigError for an empty determiner set and DataError
// for an unlabeled or unresolvable mention.
std::vector<AnaphorPrediction> ScicorpAnaphors(std::span<const Mention> predictions,
                                               const Corpus& corpus,
                                               const std::set<std::string>& determiners);

// {my, your, his, her, its, our, their}
const std::set<std::string>& PossessivePronouns();

using WarningSink = std::function<void(const std::string&)>;

// Drops gold anaphors tagged as containing inferrables. When no anaphor of
// the input carries a subtype tag, drops those starting with a possessive
// pronoun instead and reports that through `warn`.
std::vector<Mention> FilterContainingInferrable(std::span<const Mention> gold_anaphors,
                                                const Corpus& corpus,
                                                const WarningSink& warn);

// Exact-boundary PRF; categories are ignored.
PRF EvalBridging(std::span<const Mention> gold_anaphors,
                 std::span<const AnaphorPrediction> predicted);

std::vector<Mention> AnaphorMentions(std::span<const AnaphorPrediction> predicted);

}  // namespace infostat

#endif  // INFOSTAT_BRIDGING_H_

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

#ifndef INFOSTAT_CLASSIFIER_H_
#define INFOSTAT_CLASSIFIER_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "infostat/encoder.h"
#include "infostat/optim.h"

namespace infostat {

struct TrainConfig {
  int epochs = 1;
  double learning_rate = 1e-5;
  int batch_size = 32;
  uint64_t seed = 42;
  int max_seq_len = 128;
  // Optional cap on optimizer steps; 0 means epochs * batches.
  long long max_steps = 0;

  void Validate() const;
  bool operator==(const TrainConfig&) const = default;
};

// epochs=1, learning_rate=1e-5, batch_size=32.
TrainConfig DefaultMentionTrainConfig();
// epochs=3, learning_rate=3e-5, batch_size=32.
TrainConfig DefaultIsTrainConfig();

// Linear map from a span representation to class logits.
class LinearHead {
 public:
  LinearHead() = default;
  LinearHead(int input_dim, int num_classes, uint64_t seed);

  int input_dim() const { return input_dim_; }
  int num_classes() const { return num_classes_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& bias() const { return bias_; }

  Vector Logits(const BoundaryStates& states) const;

  // Accumulates dLoss/dW, dLoss/db for one item and returns dLoss/dstates.
  BoundaryStates Backward(const BoundaryStates& states, const Vector& grad_logits,
                          std::vector<double>& grad_w,
                          std::vector<double>& grad_b) const;
  void Step(std::span<const double> grad_w, std::span<const double> grad_b,
            double learning_rate);

  void SetParameters(std::vector<double> weights, std::vector<double> bias);

 private:
  int input_dim_ = 0;
  int num_classes_ = 0;
  std::vector<double> weights_;  // num_classes x input_dim, row-major
  std::vector<double> bias_;
  Adam weight_opt_{0};
  Adam bias_opt_{0};
};

// Numerically stable softmax.
Vector Softmax(const Vector& logits);

// Index of the largest value; ties go to the lowest index.
int Argmax(const Vector& values);

struct TrainingLog {
  std::vector<double> loss;           // mean batch loss per step
  std::vector<double> learning_rate;  // rate used at each step
};

// Produces the (untruncated) model input for instance i.
using InputFn = std::function<MarkedSequence(size_t)>;

// Jointly fine-tunes encoder and head with cross-entropy. Instances are
// shuffled each epoch with config.seed; the learning rate decays linearly.
TrainingLog TrainClassifier(EncoderBackend& backend, LinearHead& head,
                            size_t num_instances, const InputFn& input,
                            std::span<const int> labels,
                            const TrainConfig& config);

// Class probabilities for already-truncated inputs, batched by batch_size.
std::vector<Vector> ClassProbabilities(const EncoderBackend& backend,
                                       const LinearHead& head,
                                       std::span<const MarkedSequence> inputs,
                                       int batch_size);

// Serialization helpers shared by the model artifacts.
struct ModelFiles {
  static constexpr char kModel[] = "model.json";
  static constexpr char kBackendDir[] = "backend";
  static constexpr char kTrainingLog[] = "training_log.tsv";
};

void WriteTrainingLog(const TrainingLog& log, const std::filesystem::path& path);
TrainingLog ReadTrainingLog(const std::filesystem::path& path);

}  // namespace infostat

#endif  // INFOSTAT_CLASSIFIER_H_

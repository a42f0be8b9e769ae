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

#include "infostat/classifier.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "infostat/errors.h"
#include "infostat/rng.h"

namespace infostat {

void TrainConfig::Validate() const {
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  if (!(learning_rate > 0.0)) throw ConfigError("learning_rate must be > 0");
  if (batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (max_seq_len < 8) throw ConfigError("max_seq_len must be >= 8");
  if (max_steps < 0) throw ConfigError("max_steps must be >= 0");
}

TrainConfig DefaultMentionTrainConfig() {
  TrainConfig c;
  c.epochs = 1;
  c.learning_rate = 1e-5;
  c.batch_size = 32;
  return c;
}

TrainConfig DefaultIsTrainConfig() {
  TrainConfig c;
  c.epochs = 3;
  c.learning_rate = 3e-5;
  c.batch_size = 32;
  return c;
}

LinearHead::LinearHead(int input_dim, int num_classes, uint64_t seed)
    : input_dim_(input_dim),
      num_classes_(num_classes),
      weights_(static_cast<size_t>(input_dim) * num_classes),
      bias_(num_classes, 0.0),
      weight_opt_(weights_.size()),
      bias_opt_(bias_.size()) {
  Rng rng(Mix64(seed ^ 0x4ead4ead4ead4eadULL));
  const double limit = std::sqrt(6.0 / (input_dim + num_classes));
  for (double& w : weights_) w = (2.0 * rng.UniformDouble() - 1.0) * limit;
}

Vector LinearHead::Logits(const BoundaryStates& states) const {
  const int half = input_dim_ / 2;
  if (static_cast<int>(states.open.size()) != half ||
      static_cast<int>(states.close.size()) != half) {
    throw DataError("span representation has dimension " +
                    std::to_string(states.open.size() + states.close.size()) +
                    ", head expects " + std::to_string(input_dim_));
  }
  Vector logits(num_classes_);
  for (int c = 0; c < num_classes_; ++c) {
    const double* row = &weights_[static_cast<size_t>(c) * input_dim_];
    double z = bias_[c];
    for (int i = 0; i < half; ++i) z += row[i] * states.open[i];
    for (int i = 0; i < half; ++i) z += row[half + i] * states.close[i];
    logits[c] = z;
  }
  return logits;
}

BoundaryStates LinearHead::Backward(const BoundaryStates& states,
                                    const Vector& grad_logits,
                                    std::vector<double>& grad_w,
                                    std::vector<double>& grad_b) const {
  const int half = input_dim_ / 2;
  BoundaryStates grad{Vector(half, 0.0), Vector(half, 0.0)};
  for (int c = 0; c < num_classes_; ++c) {
    const double g = grad_logits[c];
    if (g == 0.0) continue;
    grad_b[c] += g;
    const double* row = &weights_[static_cast<size_t>(c) * input_dim_];
    double* grow = &grad_w[static_cast<size_t>(c) * input_dim_];
    for (int i = 0; i < half; ++i) {
      grow[i] += g * states.open[i];
      grow[half + i] += g * states.close[i];
      grad.open[i] += g * row[i];
      grad.close[i] += g * row[half + i];
    }
  }
  return grad;
}

void LinearHead::Step(std::span<const double> grad_w, std::span<const double> grad_b,
                      double learning_rate) {
  weight_opt_.Step(weights_, grad_w, learning_rate);
  bias_opt_.Step(bias_, grad_b, learning_rate);
}

void LinearHead::SetParameters(std::vector<double> weights, std::vector<double> bias) {
  if (weights.size() != weights_.size() || bias.size() != bias_.size()) {
    throw DataError("head parameters have the wrong shape");
  }
  weights_ = std::move(weights);
  bias_ = std::move(bias);
}

Vector Softmax(const Vector& logits) {
  const double top = *std::max_element(logits.begin(), logits.end());
  Vector p(logits.size());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - top);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

int Argmax(const Vector& values) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

TrainingLog TrainClassifier(EncoderBackend& backend, LinearHead& head,
                            size_t num_instances, const InputFn& input,
                            std::span<const int> labels,
                            const TrainConfig& config) {
  config.Validate();
  if (!backend.supports_training()) {
    throw ConfigError("backend " + backend.name() + " does not support training");
  }
  if (labels.size() != num_instances) throw Error("label count mismatch");
  TrainingLog log;
  if (num_instances == 0) return log;

  const long long batches_per_epoch =
      (static_cast<long long>(num_instances) + config.batch_size - 1) / config.batch_size;
  long long total = batches_per_epoch * config.epochs;
  if (config.max_steps > 0) total = std::min(total, config.max_steps);

  std::vector<size_t> order(num_instances);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(config.seed);
  const LengthFunction length = backend.length_function();
  const int budget = std::min(config.max_seq_len, backend.max_seq_len());

  std::vector<double> grad_w(head.weights().size());
  std::vector<double> grad_b(head.bias().size());
  long long step = 0;
  for (int epoch = 0; epoch < config.epochs && step < total; ++epoch) {
    rng.Shuffle(order);
    for (size_t begin = 0; begin < num_instances && step < total;
         begin += config.batch_size, ++step) {
      const size_t end = std::min(num_instances, begin + config.batch_size);
      std::vector<MarkedSequence> batch;
      batch.reserve(end - begin);
      for (size_t i = begin; i < end; ++i) {
        batch.push_back(Truncate(input(order[i]), budget, length));
      }
      const auto states = backend.EncodeBatch(batch);
      std::fill(grad_w.begin(), grad_w.end(), 0.0);
      std::fill(grad_b.begin(), grad_b.end(), 0.0);
      std::vector<BoundaryStates> grad_states;
      grad_states.reserve(batch.size());
      const double scale = 1.0 / static_cast<double>(batch.size());
      double loss = 0.0;
      for (size_t i = 0; i < batch.size(); ++i) {
        const int label = labels[order[begin + i]];
        Vector p = Softmax(head.Logits(states[i]));
        loss -= std::log(std::max(p[label], 1e-300));
        p[label] -= 1.0;
        for (double& g : p) g *= scale;
        grad_states.push_back(head.Backward(states[i], p, grad_w, grad_b));
      }
      const double rate = LinearSchedule(config.learning_rate, step, total);
      backend.TrainStep(batch, grad_states, rate);
      head.Step(grad_w, grad_b, rate);
      log.loss.push_back(loss * scale);
      log.learning_rate.push_back(rate);
    }
  }
  return log;
}

std::vector<Vector> ClassProbabilities(const EncoderBackend& backend,
                                       const LinearHead& head,
                                       std::span<const MarkedSequence> inputs,
                                       int batch_size) {
  std::vector<Vector> out;
  out.reserve(inputs.size());
  const size_t step = static_cast<size_t>(std::max(1, batch_size));
  for (size_t begin = 0; begin < inputs.size(); begin += step) {
    const size_t end = std::min(inputs.size(), begin + step);
    const auto states = backend.EncodeBatch(inputs.subspan(begin, end - begin));
    for (const auto& s : states) out.push_back(Softmax(head.Logits(s)));
  }
  return out;
}

void WriteTrainingLog(const TrainingLog& log, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << "step\tlearning_rate\tloss\n";
  out.precision(17);
  for (size_t i = 0; i < log.loss.size(); ++i) {
    out << i << '\t' << log.learning_rate[i] << '\t' << log.loss[i] << '\n';
  }
}

TrainingLog ReadTrainingLog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  TrainingLog log;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    long long step;
    double rate, loss;
    if (!(fields >> step >> rate >> loss)) {
      throw DataError(path.string() + ": malformed line '" + line + "'");
    }
    log.learning_rate.push_back(rate);
    log.loss.push_back(loss);
  }
  return log;
}

}  // namespace infostat

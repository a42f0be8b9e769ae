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

#ifndef INFOSTAT_REFERENCE_ENCODER_H_
#define INFOSTAT_REFERENCE_ENCODER_H_

#include "infostat/encoder.h"
#include "infostat/optim.h"

namespace infostat {

// Small CPU encoder for desk-scale runs and tests.
//
// Each word gets a fixed hashed embedding. The hidden state at position p is
//   h_p = tanh(W f_p + b)
// where f_p concatenates the embeddings in a window of +-`window` words
// around p, the mean embedding of the words between the markers and the mean
// embedding of the tail (zeros when there is none). Only W and b are
// trained. Encoded length counts one unit per 6 bytes of a word (at least
// one), one per special token, plus two sequence delimiters.
class ReferenceEncoder : public EncoderBackend {
 public:
  explicit ReferenceEncoder(const BackendSpec& spec);

  std::string name() const override { return kReferenceBackend; }
  int hidden_dim() const override { return spec_.hidden_dim; }
  bool supports_training() const override { return true; }
  int max_seq_len() const override { return spec_.max_seq_len; }
  int EncodedLength(const MarkedSequence& marked) const override;
  std::vector<BoundaryStates> EncodeBatch(
      std::span<const MarkedSequence> batch) const override;
  void TrainStep(std::span<const MarkedSequence> batch,
                 std::span<const BoundaryStates> grads,
                 double learning_rate) override;
  void Save(const std::filesystem::path& dir) const override;
  uint64_t Fingerprint() const override;

  static std::unique_ptr<ReferenceEncoder> Load(const std::filesystem::path& dir);

  const BackendSpec& spec() const { return spec_; }
  int feature_dim() const { return feature_dim_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& bias() const { return bias_; }

  Vector Embedding(const std::string& word) const;

 private:
  // Features at `pos`; written into `out` (size feature_dim_).
  void Features(const MarkedSequence& marked, int pos, double* out) const;
  Vector Hidden(const double* features) const;
  void CheckLength(const MarkedSequence& marked) const;

  BackendSpec spec_;
  int feature_dim_ = 0;
  std::vector<double> weights_;  // hidden_dim x feature_dim, row-major
  std::vector<double> bias_;
  Adam weight_opt_;
  Adam bias_opt_;
};

}  // namespace infostat

#endif  // INFOSTAT_REFERENCE_ENCODER_H_

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

#ifndef INFOSTAT_ENCODER_H_
#define INFOSTAT_ENCODER_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "infostat/spangen.h"

namespace infostat {

using Vector = std::vector<double>;

// Final-layer hidden states at the open and close marker positions.
struct BoundaryStates {
  Vector open;
  Vector close;

  bool operator==(const BoundaryStates&) const = default;
};

// [h_open; h_close].
struct SpanRepresentation {
  Vector vector;
};

// Throws DataError on a dimension mismatch.
SpanRepresentation MakeSpanRepresentation(const Vector& h_open,
                                          const Vector& h_close);

// A sequence encoder that maps marked sequences to contextual hidden states.
//
// Implementations are deterministic for fixed weights. Encoding is safe to
// call concurrently; TrainStep requires exclusive access.
class EncoderBackend {
 public:
  virtual ~EncoderBackend() = default;

  virtual std::string name() const = 0;
  virtual int hidden_dim() const = 0;
  virtual bool supports_training() const = 0;

  // Sequence budget in encoder units; EncodeBatch rejects longer inputs.
  virtual int max_seq_len() const = 0;

  // Length of the sequence in encoder units. Marker tokens count as one.
  virtual int EncodedLength(const MarkedSequence& marked) const = 0;

  // Per-item boundary states, in input order. Batching does not change
  // per-item results.
  virtual std::vector<BoundaryStates> EncodeBatch(
      std::span<const MarkedSequence> batch) const = 0;

  // One optimizer step on the encoder weights given the loss gradient with
  // respect to each item's boundary states.
  virtual void TrainStep(std::span<const MarkedSequence> batch,
                         std::span<const BoundaryStates> grads,
                         double learning_rate) = 0;

  // Persists weights and construction options under `dir`.
  virtual void Save(const std::filesystem::path& dir) const = 0;

  // Content fingerprint of the current weights.
  virtual uint64_t Fingerprint() const = 0;

  LengthFunction length_function() const {
    return [this](const MarkedSequence& m) { return EncodedLength(m); };
  }
};

inline constexpr char kReferenceBackend[] = "reference_deterministic";
inline constexpr char kPretrainedBackend[] = "pretrained_contextual";

struct BackendSpec {
  std::string name = kReferenceBackend;
  uint64_t seed = 13;
  int max_seq_len = 128;

  // reference_deterministic
  int embed_dim = 16;
  int hidden_dim = 32;
  int window = 2;

  // pretrained_contextual: model identifier or path handed to the server,
  // and the command that starts the encoder server.
  std::string model;
  std::string server_command;

  // Special tokens registered with the backend vocabulary.
  std::vector<std::string> special_tokens;
};

// Copy of `spec` with the marker and separator tokens of `spangen` as its
// special tokens.
BackendSpec WithSpecialTokens(BackendSpec spec, const SpanGenConfig& spangen);

// Creates a freshly initialized backend. Throws ConfigError for unknown
// names or invalid options.
std::unique_ptr<EncoderBackend> CreateBackend(const BackendSpec& spec);

// Restores a backend written by EncoderBackend::Save.
std::unique_ptr<EncoderBackend> LoadBackend(const std::filesystem::path& dir);

// Environment variable naming the default model cache directory used to
// resolve relative pretrained model identifiers.
inline constexpr char kModelCacheEnv[] = "INFOSTAT_MODEL_CACHE";

}  // namespace infostat

#endif  // INFOSTAT_ENCODER_H_

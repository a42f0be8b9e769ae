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

#ifndef INFOSTAT_SUBPROCESS_ENCODER_H_
#define INFOSTAT_SUBPROCESS_ENCODER_H_

#include <sys/types.h>

#include <iosfwd>
#include <mutex>
#include <string>
#include <unordered_map>

#include "infostat/encoder.h"

namespace infostat {

// Line-delimited JSON encoder protocol spoken over a child process's
// stdin/stdout. Requests carry an "op" field; every response carries "ok"
// and, on failure, "error".
//
//   init        {model, special_tokens, seed, max_seq_len}
//               -> {hidden_dim, supports_training}
//   lengths     {batch: [item]}                -> {lengths: [int]}
//   encode      {batch: [item]}                -> {states: [{open, close}]}
//   train_step  {batch: [item], grads: [{open, close}], lr}
//   save        {dir}
//   fingerprint                                -> {fingerprint: hex string}
//   shutdown
//
// where item = {words: [string], open: int, close: int, tail: int}.

// Owns a child process connected through two pipes.
class ChildProcess {
 public:
  explicit ChildProcess(const std::string& shell_command);
  ~ChildProcess();
  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  void WriteLine(const std::string& line);
  // Throws Error if the child closed its output.
  std::string ReadLine();

 private:
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

// pretrained_contextual: a pretrained transformer hosted by an external
// encoder server (see tools/encoder_server.py).
class SubprocessEncoder : public EncoderBackend {
 public:
  // Starts the server named by spec.server_command (or the
  // INFOSTAT_ENCODER_SERVER environment variable) and initializes it.
  explicit SubprocessEncoder(const BackendSpec& spec);
  ~SubprocessEncoder() override;

  std::string name() const override { return kPretrainedBackend; }
  int hidden_dim() const override { return hidden_dim_; }
  bool supports_training() const override { return supports_training_; }
  int max_seq_len() const override { return spec_.max_seq_len; }
  int EncodedLength(const MarkedSequence& marked) const override;
  std::vector<BoundaryStates> EncodeBatch(
      std::span<const MarkedSequence> batch) const override;
  void TrainStep(std::span<const MarkedSequence> batch,
                 std::span<const BoundaryStates> grads,
                 double learning_rate) override;
  void Save(const std::filesystem::path& dir) const override;
  uint64_t Fingerprint() const override;

  static std::unique_ptr<SubprocessEncoder> Load(const std::filesystem::path& dir);

 private:
  std::string Call(const std::string& request) const;

  BackendSpec spec_;
  int hidden_dim_ = 0;
  bool supports_training_ = false;
  mutable std::mutex mu_;
  mutable std::unique_ptr<ChildProcess> child_;
  mutable std::unordered_map<std::string, int> length_cache_;
};

// Serves the encoder protocol for an in-process backend until "shutdown" or
// end of input. `create` builds the backend from the init request.
using BackendFactory = std::function<std::unique_ptr<EncoderBackend>(
    const std::string& model, const BackendSpec& spec)>;
void ServeEncoderProtocol(std::istream& in, std::ostream& out,
                          const BackendFactory& create);

}  // namespace infostat

#endif  // INFOSTAT_SUBPROCESS_ENCODER_H_

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

// Serves the reference encoder over the line-delimited encoder protocol on
// stdin/stdout. Useful for exercising the pretrained_contextual backend
// without a transformer installation.

#include <filesystem>
#include <iostream>

#include "infostat/reference_encoder.h"
#include "infostat/subprocess_encoder.h"

int main() {
  std::ios::sync_with_stdio(false);
  infostat::ServeEncoderProtocol(
      std::cin, std::cout,
      [](const std::string& model, const infostat::BackendSpec& spec)
          -> std::unique_ptr<infostat::EncoderBackend> {
        if (!model.empty() && std::filesystem::exists(std::filesystem::path(model) / "backend.json")) {
          return infostat::ReferenceEncoder::Load(model);
        }
        infostat::BackendSpec reference = spec;
        reference.name = infostat::kReferenceBackend;
        return std::make_unique<infostat::ReferenceEncoder>(reference);
      });
  return 0;
}

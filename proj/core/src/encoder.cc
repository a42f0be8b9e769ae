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

#include "infostat/encoder.h"

#include <fstream>

#include <nlohmann/json.hpp>

#include "infostat/errors.h"
#include "infostat/reference_encoder.h"
#include "infostat/subprocess_encoder.h"

namespace infostat {

SpanRepresentation MakeSpanRepresentation(const Vector& h_open,
                                          const Vector& h_close) {
  if (h_open.size() != h_close.size()) {
    throw DataError("boundary state dimensions differ: " +
                    std::to_string(h_open.size()) + " vs " +
                    std::to_string(h_close.size()));
  }
  SpanRepresentation rep;
  rep.vector.reserve(h_open.size() * 2);
  rep.vector.insert(rep.vector.end(), h_open.begin(), h_open.end());
  rep.vector.insert(rep.vector.end(), h_close.begin(), h_close.end());
  return rep;
}

BackendSpec WithSpecialTokens(BackendSpec spec, const SpanGenConfig& spangen) {
  spec.special_tokens = {spangen.marker_open, spangen.marker_close, spangen.separator};
  return spec;
}

std::unique_ptr<EncoderBackend> CreateBackend(const BackendSpec& spec) {
  if (spec.name == kReferenceBackend) return std::make_unique<ReferenceEncoder>(spec);
  if (spec.name == kPretrainedBackend) return std::make_unique<SubprocessEncoder>(spec);
  throw ConfigError("unknown encoder backend '" + spec.name + "' (expected " +
                    kReferenceBackend + " or " + kPretrainedBackend + ")");
}

std::unique_ptr<EncoderBackend> LoadBackend(const std::filesystem::path& dir) {
  std::ifstream in(dir / "backend.json");
  if (!in) throw DataError("no backend.json in " + dir.string());
  std::string name;
  try {
    name = nlohmann::json::parse(in).at("name").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError((dir / "backend.json").string() + ": " + e.what());
  }
  if (name == kReferenceBackend) return ReferenceEncoder::Load(dir);
  if (name == kPretrainedBackend) return SubprocessEncoder::Load(dir);
  throw DataError("unknown encoder backend '" + name + "' in " + dir.string());
}

}  // namespace infostat

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

#include "infostat/reference_encoder.h"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "infostat/errors.h"
#include "infostat/rng.h"

namespace infostat {
namespace {

constexpr int kBytesPerUnit = 6;
constexpr int kDelimiters = 2;
constexpr int kMaxEmbedDim = 64;

}  // namespace

ReferenceEncoder::ReferenceEncoder(const BackendSpec& spec)
    : spec_(spec),
      feature_dim_((2 * spec.window + 1) * spec.embed_dim + 2 * spec.embed_dim),
      weights_(static_cast<size_t>(spec.hidden_dim) * feature_dim_),
      bias_(spec.hidden_dim, 0.0),
      weight_opt_(weights_.size()),
      bias_opt_(bias_.size()) {
  if (spec.embed_dim < 1 || spec.embed_dim > kMaxEmbedDim) {
    throw ConfigError("reference encoder embed_dim must be in [1, 64]");
  }
  if (spec.hidden_dim < 1) throw ConfigError("hidden_dim must be >= 1");
  if (spec.window < 0) throw ConfigError("window must be >= 0");
  if (spec.max_seq_len < 8) throw ConfigError("max_seq_len must be >= 8");
  Rng rng(Mix64(spec.seed ^ 0x5eed0f0e1c0de5ULL));
  const double limit = std::sqrt(6.0 / (feature_dim_ + spec.hidden_dim));
  for (double& w : weights_) w = (2.0 * rng.UniformDouble() - 1.0) * limit;
}

Vector ReferenceEncoder::Embedding(const std::string& word) const {
  const uint64_t h = Fnv1a64(word.data(), word.size());
  const double scale = std::sqrt(3.0 / spec_.embed_dim);
  Vector e(spec_.embed_dim);
  for (int k = 0; k < spec_.embed_dim; ++k) {
    const uint64_t x = Mix64(h ^ Mix64(spec_.seed * 1000003ULL + k));
    const double u = static_cast<double>(x >> 11) * 0x1.0p-53;
    e[k] = (2.0 * u - 1.0) * scale;
  }
  return e;
}

int ReferenceEncoder::EncodedLength(const MarkedSequence& marked) const {
  const int n = static_cast<int>(marked.words.size());
  const int separator_pos = marked.tail_size > 0 ? n - marked.tail_size : -1;
  int units = kDelimiters;
  for (int i = 0; i < n; ++i) {
    if (i == marked.marker_open_pos || i == marked.marker_close_pos ||
        i == separator_pos) {
      units += 1;
    } else {
      const int bytes = static_cast<int>(marked.words[i].size());
      units += std::max(1, (bytes + kBytesPerUnit - 1) / kBytesPerUnit);
    }
  }
  return units;
}

void ReferenceEncoder::Features(const MarkedSequence& marked, int pos,
                                double* out) const {
  const int d = spec_.embed_dim;
  const int n = static_cast<int>(marked.words.size());
  std::fill(out, out + feature_dim_, 0.0);
  double* slot = out;
  for (int o = -spec_.window; o <= spec_.window; ++o, slot += d) {
    const int j = pos + o;
    if (j < 0 || j >= n) continue;
    const Vector e = Embedding(marked.words[j]);
    std::copy(e.begin(), e.end(), slot);
  }
  auto mean_into = [&](int begin, int end, double* dst) {
    if (begin >= end) return;
    for (int j = begin; j < end; ++j) {
      const Vector e = Embedding(marked.words[j]);
      for (int k = 0; k < d; ++k) dst[k] += e[k];
    }
    for (int k = 0; k < d; ++k) dst[k] /= (end - begin);
  };
  mean_into(marked.marker_open_pos + 1, marked.marker_close_pos, slot);
  mean_into(n - marked.tail_size, n, slot + d);
}

Vector ReferenceEncoder::Hidden(const double* f) const {
  Vector h(spec_.hidden_dim);
  for (int r = 0; r < spec_.hidden_dim; ++r) {
    const double* row = &weights_[static_cast<size_t>(r) * feature_dim_];
    double z = bias_[r];
    for (int c = 0; c < feature_dim_; ++c) z += row[c] * f[c];
    h[r] = std::tanh(z);
  }
  return h;
}

void ReferenceEncoder::CheckLength(const MarkedSequence& marked) const {
  const int len = EncodedLength(marked);
  if (len > spec_.max_seq_len) {
    throw SpanTooLongError("sequence of " + std::to_string(len) +
                           " encoder units exceeds the budget of " +
                           std::to_string(spec_.max_seq_len) +
                           "; truncate before encoding");
  }
}

std::vector<BoundaryStates> ReferenceEncoder::EncodeBatch(
    std::span<const MarkedSequence> batch) const {
  std::vector<BoundaryStates> out;
  out.reserve(batch.size());
  std::vector<double> f(feature_dim_);
  for (const MarkedSequence& m : batch) {
    CheckLength(m);
    BoundaryStates s;
    Features(m, m.marker_open_pos, f.data());
    s.open = Hidden(f.data());
    Features(m, m.marker_close_pos, f.data());
    s.close = Hidden(f.data());
    out.push_back(std::move(s));
  }
  return out;
}

void ReferenceEncoder::TrainStep(std::span<const MarkedSequence> batch,
                                 std::span<const BoundaryStates> grads,
                                 double learning_rate) {
  if (batch.size() != grads.size()) {
    throw Error("TrainStep: batch and gradient sizes differ");
  }
  std::vector<double> grad_w(weights_.size(), 0.0);
  std::vector<double> grad_b(bias_.size(), 0.0);
  std::vector<double> f(feature_dim_);
  auto accumulate = [&](const MarkedSequence& m, int pos, const Vector& g) {
    Features(m, pos, f.data());
    const Vector h = Hidden(f.data());
    for (int r = 0; r < spec_.hidden_dim; ++r) {
      const double dz = g[r] * (1.0 - h[r] * h[r]);
      if (dz == 0.0) continue;
      grad_b[r] += dz;
      double* row = &grad_w[static_cast<size_t>(r) * feature_dim_];
      for (int c = 0; c < feature_dim_; ++c) row[c] += dz * f[c];
    }
  };
  for (size_t i = 0; i < batch.size(); ++i) {
    CheckLength(batch[i]);
    accumulate(batch[i], batch[i].marker_open_pos, grads[i].open);
    accumulate(batch[i], batch[i].marker_close_pos, grads[i].close);
  }
  weight_opt_.Step(weights_, grad_w, learning_rate);
  bias_opt_.Step(bias_, grad_b, learning_rate);
}

void ReferenceEncoder::Save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  nlohmann::json j = {
      {"name", kReferenceBackend},
      {"seed", spec_.seed},
      {"max_seq_len", spec_.max_seq_len},
      {"embed_dim", spec_.embed_dim},
      {"hidden_dim", spec_.hidden_dim},
      {"window", spec_.window},
      {"special_tokens", spec_.special_tokens},
      {"weights", weights_},
      {"bias", bias_},
  };
  std::ofstream out(dir / "backend.json", std::ios::trunc);
  if (!out) throw DataError("cannot write " + (dir / "backend.json").string());
  out << j.dump() << '\n';
}

std::unique_ptr<ReferenceEncoder> ReferenceEncoder::Load(
    const std::filesystem::path& dir) {
  std::ifstream in(dir / "backend.json");
  if (!in) throw DataError("cannot read " + (dir / "backend.json").string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    BackendSpec spec;
    spec.name = kReferenceBackend;
    spec.seed = j.at("seed").get<uint64_t>();
    spec.max_seq_len = j.at("max_seq_len").get<int>();
    spec.embed_dim = j.at("embed_dim").get<int>();
    spec.hidden_dim = j.at("hidden_dim").get<int>();
    spec.window = j.at("window").get<int>();
    spec.special_tokens = j.value("special_tokens", std::vector<std::string>{});
    auto enc = std::make_unique<ReferenceEncoder>(spec);
    auto weights = j.at("weights").get<std::vector<double>>();
    auto bias = j.at("bias").get<std::vector<double>>();
    if (weights.size() != enc->weights_.size() || bias.size() != enc->bias_.size()) {
      throw DataError("reference encoder weights have the wrong shape");
    }
    enc->weights_ = std::move(weights);
    enc->bias_ = std::move(bias);
    return enc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError((dir / "backend.json").string() + ": " + e.what());
  }
}

uint64_t ReferenceEncoder::Fingerprint() const {
  uint64_t h = Fnv1a64(weights_.data(), weights_.size() * sizeof(double));
  return Fnv1a64(bias_.data(), bias_.size() * sizeof(double), h);
}

}  // namespace infostat

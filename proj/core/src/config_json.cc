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

#include "infostat/config_json.h"

#include <set>

#include "infostat/errors.h"

namespace infostat {
namespace {

using nlohmann::json;

// Walks an object, dispatching known keys and rejecting the rest.
class FieldReader {
 public:
  FieldReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  template <typename T>
  void Read(const char* key, T& out) {
    known_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) return;
    try {
      out = it->get<T>();
    } catch (const json::exception&) {
      throw ConfigError(Field(key) + ": wrong type");
    }
  }

  void Finish() const {
    for (const auto& [key, _] : j_.items()) {
      if (!known_.count(key)) throw ConfigError(Field(key.c_str()) + ": unknown field");
    }
  }

  std::string Field(const char* key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> known_;
};

template <typename Fn>
void Validated(const std::string& path, Fn&& validate) {
  try {
    validate();
  } catch (const ConfigError& e) {
    throw ConfigError((path.empty() ? "" : path + ": ") + e.what());
  }
}

}  // namespace

json ToJson(const TrainConfig& c) {
  return {{"epochs", c.epochs},           {"learning_rate", c.learning_rate},
          {"batch_size", c.batch_size},   {"seed", c.seed},
          {"max_seq_len", c.max_seq_len}, {"max_steps", c.max_steps}};
}

TrainConfig ParseTrainConfig(const json& j, const std::string& path,
                             TrainConfig c) {
  FieldReader r(j, path);
  r.Read("epochs", c.epochs);
  r.Read("learning_rate", c.learning_rate);
  r.Read("batch_size", c.batch_size);
  r.Read("seed", c.seed);
  r.Read("max_seq_len", c.max_seq_len);
  r.Read("max_steps", c.max_steps);
  r.Finish();
  Validated(path, [&] { c.Validate(); });
  return c;
}

json ToJson(const SpanGenConfig& c) {
  return {{"max_train_span_len", c.max_train_span_len},
          {"marker_open", c.marker_open},
          {"marker_close", c.marker_close},
          {"separator", c.separator},
          {"seen_token", c.seen_token},
          {"unseen_token", c.unseen_token},
          {"max_seq_len", c.max_seq_len},
          {"pruning_lexicon", c.pruning_lexicon}};
}

SpanGenConfig ParseSpanGenConfig(const json& j, const std::string& path,
                                 SpanGenConfig c) {
  FieldReader r(j, path);
  r.Read("max_train_span_len", c.max_train_span_len);
  r.Read("marker_open", c.marker_open);
  r.Read("marker_close", c.marker_close);
  r.Read("separator", c.separator);
  r.Read("seen_token", c.seen_token);
  r.Read("unseen_token", c.unseen_token);
  r.Read("max_seq_len", c.max_seq_len);
  r.Read("pruning_lexicon", c.pruning_lexicon);
  r.Finish();
  Validated(path, [&] { c.Validate(); });
  return c;
}

json ToJson(const BackendSpec& s) {
  return {{"name", s.name},
          {"seed", s.seed},
          {"max_seq_len", s.max_seq_len},
          {"embed_dim", s.embed_dim},
          {"hidden_dim", s.hidden_dim},
          {"window", s.window},
          {"model", s.model},
          {"server_command", s.server_command}};
}

BackendSpec ParseBackendSpec(const json& j, const std::string& path, BackendSpec s) {
  FieldReader r(j, path);
  r.Read("name", s.name);
  r.Read("seed", s.seed);
  r.Read("max_seq_len", s.max_seq_len);
  r.Read("embed_dim", s.embed_dim);
  r.Read("hidden_dim", s.hidden_dim);
  r.Read("window", s.window);
  r.Read("model", s.model);
  r.Read("server_command", s.server_command);
  r.Finish();
  if (s.name != kReferenceBackend && s.name != kPretrainedBackend) {
    throw ConfigError(r.Field("name") + ": unknown backend '" + s.name + "'");
  }
  return s;
}

}  // namespace infostat

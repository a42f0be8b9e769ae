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

#include "infostat/subprocess_encoder.h"

#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "infostat/errors.h"

namespace infostat {
namespace {

using nlohmann::json;

json ItemJson(const MarkedSequence& m) {
  return {{"words", m.words},
          {"open", m.marker_open_pos},
          {"close", m.marker_close_pos},
          {"tail", m.tail_size}};
}

json BatchJson(std::span<const MarkedSequence> batch) {
  json items = json::array();
  for (const auto& m : batch) items.push_back(ItemJson(m));
  return items;
}

MarkedSequence ItemFromJson(const json& j) {
  MarkedSequence m;
  m.words = j.at("words").get<std::vector<std::string>>();
  m.marker_open_pos = j.at("open").get<int>();
  m.marker_close_pos = j.at("close").get<int>();
  m.tail_size = j.value("tail", 0);
  const int n = static_cast<int>(m.words.size());
  if (m.marker_open_pos < 0 || m.marker_open_pos >= m.marker_close_pos ||
      m.marker_close_pos >= n - m.tail_size || m.tail_size < 0) {
    throw DataError("malformed marked sequence in request");
  }
  return m;
}

std::string ResolveModel(const std::string& model) {
  if (model.empty()) return model;
  const std::filesystem::path p(model);
  if (p.is_absolute() || std::filesystem::exists(p)) return model;
  if (const char* cache = std::getenv(kModelCacheEnv); cache && *cache) {
    const auto cached = std::filesystem::path(cache) / p;
    if (std::filesystem::exists(cached)) return cached.string();
  }
  return model;
}

std::string HexFingerprint(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

ChildProcess::ChildProcess(const std::string& shell_command) {
  int fds[2];
  if (socketpair(AF_UNIX, SOCK_STREAM, 0, fds) != 0) {
    throw Error(std::string("socketpair failed: ") + std::strerror(errno));
  }
  pid_ = fork();
  if (pid_ < 0) {
    close(fds[0]);
    close(fds[1]);
    throw Error(std::string("fork failed: ") + std::strerror(errno));
  }
  if (pid_ == 0) {
    close(fds[0]);
    dup2(fds[1], STDIN_FILENO);
    dup2(fds[1], STDOUT_FILENO);
    close(fds[1]);
    execl("/bin/sh", "sh", "-c", shell_command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  to_child_ = from_child_ = fds[0];
}

ChildProcess::~ChildProcess() {
  if (to_child_ >= 0) close(to_child_);
  if (pid_ > 0) {
    int status = 0;
    waitpid(pid_, &status, 0);
  }
}

void ChildProcess::WriteLine(const std::string& line) {
  std::string data = line;
  data.push_back('\n');
  size_t sent = 0;
  while (sent < data.size()) {
    const ssize_t n = send(to_child_, data.data() + sent, data.size() - sent,
                           MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(std::string("encoder server write failed: ") + std::strerror(errno));
    }
    sent += static_cast<size_t>(n);
  }
}

std::string ChildProcess::ReadLine() {
  for (;;) {
    if (const auto nl = buffer_.find('\n'); nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    char chunk[65536];
    const ssize_t n = recv(from_child_, chunk, sizeof(chunk), 0);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw Error("encoder server closed its output");
    buffer_.append(chunk, static_cast<size_t>(n));
  }
}

SubprocessEncoder::SubprocessEncoder(const BackendSpec& spec) : spec_(spec) {
  std::string command = spec_.server_command;
  if (command.empty()) {
    if (const char* env = std::getenv("INFOSTAT_ENCODER_SERVER"); env && *env) {
      command = env;
    }
  }
  if (command.empty()) {
    throw ConfigError("pretrained_contextual backend needs server_command or "
                      "INFOSTAT_ENCODER_SERVER");
  }
  if (spec_.model.empty()) {
    throw ConfigError("pretrained_contextual backend needs a model identifier");
  }
  spec_.server_command = command;
  child_ = std::make_unique<ChildProcess>(command);
  const json init = {{"op", "init"},
                     {"model", ResolveModel(spec_.model)},
                     {"special_tokens", spec_.special_tokens},
                     {"seed", spec_.seed},
                     {"max_seq_len", spec_.max_seq_len}};
  const json reply = json::parse(Call(init.dump()));
  hidden_dim_ = reply.at("hidden_dim").get<int>();
  supports_training_ = reply.value("supports_training", false);
  if (hidden_dim_ < 1) throw DataError("encoder server reported hidden_dim < 1");
}

SubprocessEncoder::~SubprocessEncoder() {
  try {
    std::lock_guard<std::mutex> lock(mu_);
    if (child_) child_->WriteLine(R"({"op":"shutdown"})");
  } catch (const std::exception&) {
  }
}

std::string SubprocessEncoder::Call(const std::string& request) const {
  std::lock_guard<std::mutex> lock(mu_);
  child_->WriteLine(request);
  std::string line = child_->ReadLine();
  json reply;
  try {
    reply = json::parse(line);
  } catch (const json::exception&) {
    throw DataError("encoder server sent malformed reply: " + line.substr(0, 200));
  }
  if (!reply.value("ok", false)) {
    const std::string what = reply.value("error", std::string("unknown error"));
    if (reply.value("kind", std::string()) == "too_long") throw SpanTooLongError(what);
    throw DataError("encoder server error: " + what);
  }
  return line;
}

int SubprocessEncoder::EncodedLength(const MarkedSequence& marked) const {
  std::string key;
  for (const auto& w : marked.words) {
    key += w;
    key.push_back('\x1f');
  }
  key += std::to_string(marked.marker_open_pos) + ":" +
         std::to_string(marked.marker_close_pos) + ":" +
         std::to_string(marked.tail_size);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = length_cache_.find(key); it != length_cache_.end()) return it->second;
  }
  const json request = {{"op", "lengths"}, {"batch", json::array({ItemJson(marked)})}};
  const json reply = json::parse(Call(request.dump()));
  const int len = reply.at("lengths").at(0).get<int>();
  std::lock_guard<std::mutex> lock(mu_);
  length_cache_.emplace(std::move(key), len);
  return len;
}

std::vector<BoundaryStates> SubprocessEncoder::EncodeBatch(
    std::span<const MarkedSequence> batch) const {
  if (batch.empty()) return {};
  const json request = {{"op", "encode"}, {"batch", BatchJson(batch)}};
  const json reply = json::parse(Call(request.dump()));
  const json& states = reply.at("states");
  if (states.size() != batch.size()) {
    throw DataError("encoder server returned the wrong number of states");
  }
  std::vector<BoundaryStates> out;
  out.reserve(batch.size());
  for (const json& s : states) {
    BoundaryStates b{s.at("open").get<Vector>(), s.at("close").get<Vector>()};
    if (static_cast<int>(b.open.size()) != hidden_dim_ ||
        static_cast<int>(b.close.size()) != hidden_dim_) {
      throw DataError("encoder server returned states of the wrong dimension");
    }
    out.push_back(std::move(b));
  }
  return out;
}

void SubprocessEncoder::TrainStep(std::span<const MarkedSequence> batch,
                                  std::span<const BoundaryStates> grads,
                                  double learning_rate) {
  if (!supports_training_) throw ConfigError("encoder server does not support training");
  json g = json::array();
  for (const auto& s : grads) g.push_back({{"open", s.open}, {"close", s.close}});
  const json request = {{"op", "train_step"},
                        {"batch", BatchJson(batch)},
                        {"grads", std::move(g)},
                        {"lr", learning_rate}};
  Call(request.dump());
}

void SubprocessEncoder::Save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  const auto weights = std::filesystem::absolute(dir / "encoder");
  Call(json({{"op", "save"}, {"dir", weights.string()}}).dump());
  const json j = {{"name", kPretrainedBackend},
                  {"model", spec_.model},
                  {"server_command", spec_.server_command},
                  {"seed", spec_.seed},
                  {"max_seq_len", spec_.max_seq_len},
                  {"special_tokens", spec_.special_tokens},
                  {"hidden_dim", hidden_dim_},
                  {"fingerprint", HexFingerprint(Fingerprint())}};
  std::ofstream out(dir / "backend.json", std::ios::trunc);
  if (!out) throw DataError("cannot write " + (dir / "backend.json").string());
  out << j.dump() << '\n';
}

uint64_t SubprocessEncoder::Fingerprint() const {
  const json reply = json::parse(Call(R"({"op":"fingerprint"})"));
  return std::stoull(reply.at("fingerprint").get<std::string>(), nullptr, 16);
}

std::unique_ptr<SubprocessEncoder> SubprocessEncoder::Load(
    const std::filesystem::path& dir) {
  std::ifstream in(dir / "backend.json");
  if (!in) throw DataError("cannot read " + (dir / "backend.json").string());
  try {
    const json j = json::parse(in);
    BackendSpec spec;
    spec.name = kPretrainedBackend;
    spec.model = std::filesystem::absolute(dir / "encoder").string();
    spec.server_command = j.at("server_command").get<std::string>();
    spec.seed = j.at("seed").get<uint64_t>();
    spec.max_seq_len = j.at("max_seq_len").get<int>();
    spec.special_tokens = j.at("special_tokens").get<std::vector<std::string>>();
    return std::make_unique<SubprocessEncoder>(spec);
  } catch (const json::exception& e) {
    throw DataError((dir / "backend.json").string() + ": " + e.what());
  }
}

void ServeEncoderProtocol(std::istream& in, std::ostream& out,
                          const BackendFactory& create) {
  std::unique_ptr<EncoderBackend> backend;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json reply = {{"ok", true}};
    try {
      const json req = json::parse(line);
      const std::string op = req.at("op").get<std::string>();
      if (op == "shutdown") break;
      if (op == "init") {
        BackendSpec spec;
        spec.seed = req.value("seed", spec.seed);
        spec.max_seq_len = req.value("max_seq_len", spec.max_seq_len);
        spec.special_tokens =
            req.value("special_tokens", std::vector<std::string>{});
        backend = create(req.value("model", std::string()), spec);
        reply["hidden_dim"] = backend->hidden_dim();
        reply["supports_training"] = backend->supports_training();
      } else if (!backend) {
        throw ConfigError("encoder not initialized");
      } else if (op == "lengths") {
        json lengths = json::array();
        for (const json& item : req.at("batch")) {
          lengths.push_back(backend->EncodedLength(ItemFromJson(item)));
        }
        reply["lengths"] = std::move(lengths);
      } else if (op == "encode" || op == "train_step") {
        std::vector<MarkedSequence> batch;
        for (const json& item : req.at("batch")) batch.push_back(ItemFromJson(item));
        if (op == "encode") {
          json states = json::array();
          for (const auto& s : backend->EncodeBatch(batch)) {
            states.push_back({{"open", s.open}, {"close", s.close}});
          }
          reply["states"] = std::move(states);
        } else {
          std::vector<BoundaryStates> grads;
          for (const json& g : req.at("grads")) {
            grads.push_back({g.at("open").get<Vector>(), g.at("close").get<Vector>()});
          }
          backend->TrainStep(batch, grads, req.at("lr").get<double>());
        }
      } else if (op == "save") {
        backend->Save(req.at("dir").get<std::string>());
      } else if (op == "fingerprint") {
        reply["fingerprint"] = HexFingerprint(backend->Fingerprint());
      } else {
        throw ConfigError("unknown op '" + op + "'");
      }
    } catch (const SpanTooLongError& e) {
      reply = {{"ok", false}, {"kind", "too_long"}, {"error", e.what()}};
    } catch (const std::exception& e) {
      reply = {{"ok", false}, {"error", e.what()}};
    }
    out << reply.dump() << '\n' << std::flush;
  }
}

}  // namespace infostat

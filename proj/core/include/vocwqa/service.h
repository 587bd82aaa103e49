// Copyright 2026 The vocwqa Authors.
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

#ifndef VOCWQA_SERVICE_H_
#define VOCWQA_SERVICE_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "vocwqa/app.h"
#include "vocwqa/corpus.h"

namespace vocwqa {

struct HttpReply {
  int status = 200;
  std::string body;  // UTF-8 JSON
};

// Handlers behind the HTTP routes, usable without a socket.
HttpReply HandleAsk(const Corpus& corpus, std::string_view request_body,
                    const AnswerConfig& config = {});
HttpReply HandleHealth(const Corpus& corpus);
HttpReply HandleStats(const Corpus& corpus);

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::optional<std::filesystem::path> static_dir;
  AnswerConfig config;
};

// HTTP front end:
//   POST /api/ask    {"question": "..."} -> answer report
//   GET  /api/health {"status":"up","courses":N}
//   GET  /api/stats  entity and triple counts
// plus static files from static_dir. Each request reads the snapshot held
// by the KnowledgeBase at its start, so a reload never tears a request.
class Service {
 public:
  Service(KnowledgeBase& kb, ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds the socket; returns the bound port. Throws Error when the port
  // is busy or the static directory is missing.
  int Bind();
  // Serves until Stop(). Binds first if needed.
  void Run();
  // Runs on a background thread.
  void Start();
  void Stop();
  int port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace vocwqa

#endif  // VOCWQA_SERVICE_H_

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

#include "vocwqa/service.h"

#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "vocwqa/text.h"

namespace vocwqa {
namespace {

using nlohmann::json;

HttpReply ErrorReply(int status, const std::string& message) {
  return {status, json{{"error", message}}.dump()};
}

}  // namespace

HttpReply HandleAsk(const Corpus& corpus, std::string_view request_body,
                    const AnswerConfig& config) {
  json request = json::parse(request_body, nullptr, false);
  if (request.is_discarded() || !request.is_object()) {
    return ErrorReply(400, "request body must be a JSON object");
  }
  auto q = request.find("question");
  if (q != request.end() && !q->is_string() && !q->is_null()) {
    return ErrorReply(400, "question must be a string");
  }
  std::string question = q == request.end() || q->is_null() ? "" : q->get<std::string>();
  if (Trim(question).empty()) return ErrorReply(400, "empty question");
  return {200, ReportToJson(Answer(question, corpus.graph, config))};
}

HttpReply HandleHealth(const Corpus& corpus) {
  return {200, json{{"status", "up"}, {"courses", corpus.graph.CountClass(Class::kCourse)}}.dump()};
}

HttpReply HandleStats(const Corpus& corpus) {
  const Graph& g = corpus.graph;
  json classes = json::object();
  for (int c = 0; c < kNumClasses; ++c) {
    classes[ClassName(static_cast<Class>(c))] = g.CountClass(static_cast<Class>(c));
  }
  json j{{"entities", g.entity_count()},
         {"triples", g.triple_count()},
         {"literals", g.literal_count()},
         {"records", corpus.report.records_loaded},
         {"inferred_triples", corpus.report.inferred_triples},
         {"classes", classes}};
  return {200, j.dump()};
}

struct Service::Impl {
  KnowledgeBase& kb;
  ServiceOptions options;
  httplib::Server server;
  std::thread thread;
  int bound_port = -1;

  Impl(KnowledgeBase& k, ServiceOptions o) : kb(k), options(std::move(o)) {
    auto send = [](httplib::Response& res, const HttpReply& reply) {
      res.status = reply.status;
      res.set_content(reply.body, "application/json; charset=utf-8");
    };
    // SO_REUSEADDR only: the library default adds SO_REUSEPORT, which would
    // let a second server share a busy port silently.
    server.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    server.Post("/api/ask", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, HandleAsk(*kb.snapshot(), req.body, options.config));
    });
    server.Get("/api/health", [this, send](const httplib::Request&, httplib::Response& res) {
      send(res, HandleHealth(*kb.snapshot()));
    });
    server.Get("/api/stats", [this, send](const httplib::Request&, httplib::Response& res) {
      send(res, HandleStats(*kb.snapshot()));
    });
  }
};

Service::Service(KnowledgeBase& kb, ServiceOptions options)
    : impl_(std::make_unique<Impl>(kb, std::move(options))) {}

Service::~Service() { Stop(); }

int Service::Bind() {
  if (impl_->bound_port >= 0) return impl_->bound_port;
  if (impl_->options.static_dir &&
      !impl_->server.set_mount_point("/", impl_->options.static_dir->string())) {
    throw Error("static directory not found: " + impl_->options.static_dir->string());
  }
  int port = impl_->options.port;
  if (port == 0) {
    port = impl_->server.bind_to_any_port(impl_->options.host);
  } else if (!impl_->server.bind_to_port(impl_->options.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error("cannot bind " + impl_->options.host + ":" + std::to_string(impl_->options.port));
  }
  impl_->bound_port = port;
  return port;
}

void Service::Run() {
  Bind();
  impl_->server.listen_after_bind();
}

void Service::Start() {
  Bind();
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void Service::Stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

int Service::port() const { return impl_->bound_port; }

}  // namespace vocwqa

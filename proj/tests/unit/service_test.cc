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

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "test_support.h"

namespace vocwqa {
namespace {

using nlohmann::json;

TEST(ServiceHandlersTest, AskAndValidation) {
  Corpus c = LoadCorpus(testing::DemoCorpusPath());
  HttpReply ok = HandleAsk(c, R"({"question":"Ai đã viết sách Toan?"})");
  EXPECT_EQ(ok.status, 200);
  EXPECT_EQ(json::parse(ok.body)["status"], "ok");
  HttpReply empty = HandleAsk(c, R"({"question":""})");
  EXPECT_EQ(empty.status, 400);
  EXPECT_EQ(json::parse(empty.body)["error"], "empty question");
  EXPECT_EQ(HandleAsk(c, "not json").status, 400);
  EXPECT_EQ(HandleAsk(c, R"({"question":5})").status, 400);
  EXPECT_EQ(HandleAsk(c, "{}").status, 400);
}

TEST(ServiceHandlersTest, HealthAndStats) {
  Corpus c = LoadCorpus(testing::DemoCorpusPath());
  json h = json::parse(HandleHealth(c).body);
  EXPECT_EQ(h, (json{{"status", "up"}, {"courses", 25}}));
  json s = json::parse(HandleStats(c).body);
  EXPECT_EQ(s["triples"], c.graph.triple_count());
  EXPECT_EQ(s["entities"], c.graph.entity_count());
  EXPECT_EQ(s["classes"]["Course"], 25);
}

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    static_dir_ = std::filesystem::temp_directory_path() / ("vocwqa_static_" + std::to_string(::getpid()));
    std::filesystem::create_directories(static_dir_);
    std::ofstream(static_dir_ / "index.html") << "<html>vocwqa</html>";
    kb_ = std::make_unique<KnowledgeBase>(LoadCorpus(testing::DemoCorpusPath()));
    ServiceOptions options;
    options.port = 0;
    options.static_dir = static_dir_;
    service_ = std::make_unique<Service>(*kb_, options);
    service_->Start();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", service_->port());
  }
  void TearDown() override {
    service_->Stop();
    std::filesystem::remove_all(static_dir_);
  }

  std::filesystem::path static_dir_;
  std::unique_ptr<KnowledgeBase> kb_;
  std::unique_ptr<Service> service_;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(ServiceTest, AskOverHttp) {
  auto res = client_->Post("/api/ask", R"({"question":"Ai đã viết sách Toan?"})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  json j = json::parse(res->body);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_FALSE(j["answers"].empty());
  EXPECT_TRUE(j["generated_query"].get<std::string>().starts_with("SELECT DISTINCT ?authorname"));
  for (const char* key : {"rule_id", "parse_tree", "intent", "generated_query", "answers", "elapsed_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST_F(ServiceTest, EmptyQuestionIs400) {
  auto res = client_->Post("/api/ask", R"({"question":""})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(json::parse(res->body)["error"], "empty question");
}

TEST_F(ServiceTest, HealthStatsAndStatic) {
  auto h = client_->Get("/api/health");
  ASSERT_TRUE(h);
  EXPECT_EQ(json::parse(h->body), (json{{"status", "up"}, {"courses", 25}}));
  auto s = client_->Get("/api/stats");
  ASSERT_TRUE(s);
  EXPECT_EQ(s->status, 200);
  auto page = client_->Get("/index.html");
  ASSERT_TRUE(page);
  EXPECT_EQ(page->body, "<html>vocwqa</html>");
}

TEST_F(ServiceTest, ConcurrentAsksDuringReload) {
  std::atomic<int> failures{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      httplib::Client c("127.0.0.1", service_->port());
      for (int i = 0; i < 20; ++i) {
        auto res = c.Post("/api/ask", R"({"question":"Có bao nhiêu sách trong thư viện?"})",
                          "application/json");
        if (!res || res->status != 200) {
          ++failures;
          continue;
        }
        int count = json::parse(res->body)["answers"]["count"];
        // Either the old (25) or the new (1) snapshot, never a mix.
        if (count != 25 && count != 1) ++failures;
      }
    });
  }
  kb_->Install(std::make_shared<const Corpus>(LoadCorpusText(R"({"id":"x","name":"Toan"})" "\n")));
  for (auto& th : threads) th.join();
  EXPECT_EQ(failures, 0);
  auto h = client_->Get("/api/health");
  ASSERT_TRUE(h);
  EXPECT_EQ(json::parse(h->body)["courses"], 1);
}

TEST(ServiceStartupTest, BusyPortIsAnError) {
  KnowledgeBase kb;
  ServiceOptions options;
  options.port = 0;
  Service first(kb, options);
  int port = first.Bind();
  options.port = port;
  Service second(kb, options);
  EXPECT_THROW(second.Bind(), Error);
}

TEST(ServiceStartupTest, MissingStaticDirIsAnError) {
  KnowledgeBase kb;
  ServiceOptions options;
  options.port = 0;
  options.static_dir = "/nonexistent/static/dir";
  Service s(kb, options);
  EXPECT_THROW(s.Bind(), Error);
}

}  // namespace
}  // namespace vocwqa

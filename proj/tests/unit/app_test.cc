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

#include "vocwqa/app.h"

#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "test_support.h"
#include "vocwqa/corpus.h"

namespace vocwqa {
namespace {

const Corpus& Demo() {
  static const Corpus* c = new Corpus(LoadCorpus(testing::DemoCorpusPath()));
  return *c;
}

TEST(AppTest, AnswersBasicQuestion) {
  AnswerReport r = Answer("Ai đã viết sách Toan?", Demo().graph);
  EXPECT_EQ(r.status, AnswerStatus::kOk);
  EXPECT_EQ(r.rule_id, "Q1.1a");
  ASSERT_TRUE(r.answers.has_value());
  EXPECT_EQ(r.answers->rows, (std::vector<std::string>{"Nguyễn Văn An"}));
  ASSERT_TRUE(r.generated_query.has_value());
  EXPECT_TRUE(r.generated_query->starts_with("SELECT DISTINCT ?authorname"));
  EXPECT_GE(r.elapsed_ms, 0.0);
}

TEST(AppTest, NonQuestionIsNoParse) {
  AnswerReport r = Answer("xin chào", Demo().graph);
  EXPECT_EQ(r.status, AnswerStatus::kNoParse);
  EXPECT_FALSE(r.answers.has_value());
  EXPECT_TRUE(r.failure_position.has_value());
}

TEST(AppTest, UnknownTitleIsEmptyResult) {
  AnswerReport r = Answer("Ai đã viết sách KhongTonTai?", Demo().graph);
  EXPECT_EQ(r.status, AnswerStatus::kEmptyResult);
  ASSERT_TRUE(r.answers.has_value());
  EXPECT_TRUE(r.answers->rows.empty());
  EXPECT_EQ(r.rule_id, "Q1.1a");
}

TEST(AppTest, IntentErrorsAreNoParseWithPosition) {
  AnswerReport r = Answer("Ai đã viết sách \"Toan\" và sách \"Van\" hoặc sách \"Ly\"?", Demo().graph);
  EXPECT_EQ(r.status, AnswerStatus::kNoParse);
  EXPECT_EQ(r.failure_position, 8u);  // the "hoặc" token
  EXPECT_FALSE(r.message.empty());
}

TEST(AppTest, NeverThrowsOnOddInput) {
  for (const char* q : {"", "\xff\xfe", "\"", "\"\"?", "????", "2009?", "Ai đã viết sách \"\"?"}) {
    EXPECT_NO_THROW(Answer(q, Demo().graph)) << q;
  }
}

TEST(AppTest, CountAnswer) {
  AnswerReport r = Answer("Có bao nhiêu sách trong thư viện?", Demo().graph);
  EXPECT_EQ(r.status, AnswerStatus::kOk);
  ASSERT_TRUE(r.answers && r.answers->is_count());
  EXPECT_EQ(r.answers->count, 25u);
}

TEST(AppTest, FormatReportSectionOrder) {
  std::string text = FormatReport(Answer("Ai đã viết sách Toan?", Demo().graph), false, false);
  size_t status = text.find("status: ok");
  size_t rule = text.find("rule: Q1.1a");
  size_t query = text.find("query:");
  size_t answers = text.find("answers (1):");
  ASSERT_NE(status, std::string::npos);
  EXPECT_LT(status, rule);
  EXPECT_LT(rule, query);
  EXPECT_LT(query, answers);
  EXPECT_EQ(text.find("time:"), std::string::npos);
  std::string with_time = FormatReport(Answer("Ai đã viết sách Toan?", Demo().graph));
  EXPECT_GT(with_time.find("time:"), with_time.find("answers"));
}

TEST(AppTest, ReportJsonShape) {
  auto j = nlohmann::json::parse(ReportToJson(Answer("Ai đã viết sách Toan?", Demo().graph)));
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["rule_id"], "Q1.1a");
  EXPECT_EQ(j["answers"], nlohmann::json::array({"Nguyễn Văn An"}));
  EXPECT_TRUE(j["elapsed_ms"].is_number());
  auto c = nlohmann::json::parse(ReportToJson(Answer("Có bao nhiêu sách trong thư viện?", Demo().graph)));
  EXPECT_EQ(c["answers"]["count"], 25);
  auto n = nlohmann::json::parse(ReportToJson(Answer("xin chào", Demo().graph)));
  EXPECT_EQ(n["status"], "no_parse");
  EXPECT_TRUE(n["answers"].is_null());
  EXPECT_TRUE(n["position"].is_number());
}

TEST(AppTest, SuiteParsingAndErrors) {
  auto entries = ParseSuite(
      R"({"question":"a","expect":{"kind":"no_parse"}})"
      "\n\n"
      R"({"question":"b","expect":[{"kind":"rule","value":"Q1.1a"},{"kind":"count","value":3}]})"
      "\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[1].index, 2u);
  EXPECT_EQ(entries[1].line, 3u);
  EXPECT_EQ(entries[1].expect.size(), 2u);
  try {
    ParseSuite(R"({"question":"a","expect":{"kind":"no_parse"}})"
               "\n"
               R"({"question":"b","expect":{"kind":"sounds_right"}})"
               "\n");
    FAIL();
  } catch (const SuiteFormatError& e) {
    EXPECT_EQ(e.entry(), 2u);
  }
  EXPECT_THROW(ParseSuite("{\"question\": 1, \"expect\": {\"kind\": \"empty\"}}\n"), SuiteFormatError);
  EXPECT_THROW(ParseSuite("{\"question\": \"x\"}\n"), SuiteFormatError);
  EXPECT_THROW(ParseSuite("{\"question\": \"x\", \"expect\": {\"kind\": \"count\", \"value\": -1}}\n"),
               SuiteFormatError);
}

TEST(AppTest, StandardSuitePasses) {
  auto entries = LoadSuite(testing::TestDataDir() / "standard_suite.jsonl");
  SuiteResult r = RunSuite(entries, Demo().graph);
  EXPECT_EQ(r.passed, r.total) << FormatSuiteResult(r);
  EXPECT_EQ(r.total, 57u);
  EXPECT_DOUBLE_EQ(r.average_ms(), r.total_ms / r.total);
}

TEST(AppTest, SuiteOutcomesAreReproducible) {
  auto entries = LoadSuite(testing::TestDataDir() / "negative_suite.jsonl");
  SuiteResult a = RunSuite(entries, Demo().graph);
  SuiteResult b = RunSuite(entries, Demo().graph);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (size_t i = 0; i < a.cases.size(); ++i) EXPECT_EQ(a.cases[i].passed, b.cases[i].passed);
  EXPECT_EQ(a.passed, a.total) << FormatSuiteResult(a);
}

TEST(AppTest, FailedExpectationHasReason) {
  auto entries = ParseSuite(
      R"({"question":"Ai đã viết sách Toan?","expect":{"kind":"answers","value":["Someone"]}})"
      "\n");
  SuiteResult r = RunSuite(entries, Demo().graph);
  EXPECT_EQ(r.passed, 0u);
  EXPECT_NE(r.cases[0].reason.find("Someone"), std::string::npos);
  EXPECT_NE(FormatSuiteResult(r).find("passed: 0/1"), std::string::npos);
}

TEST(AppTest, ReplPrintsReportsUntilQuit) {
  std::istringstream in("Ai đã viết sách Toan?\n\nxin chào\n:quit\nAi đã viết sách Van?\n");
  std::ostringstream out;
  RunRepl(in, out, Demo().graph);
  std::string text = out.str();
  EXPECT_NE(text.find("status: ok"), std::string::npos);
  EXPECT_NE(text.find("status: no_parse"), std::string::npos);
  EXPECT_EQ(text.find("Trần Thị Bình"), std::string::npos);
}

TEST(AppTest, SubstringMatchWidensFilters) {
  AnswerConfig config;
  config.build.substring_match = true;
  AnswerReport r = Answer("Những sách thuộc chủ đề học là gì?", Demo().graph, config);
  ASSERT_EQ(r.status, AnswerStatus::kOk);
  EXPECT_EQ(r.answers->rows.size(), 17u);
  EXPECT_EQ(Answer("Những sách thuộc chủ đề học là gì?", Demo().graph).status,
            AnswerStatus::kEmptyResult);
}

}  // namespace
}  // namespace vocwqa

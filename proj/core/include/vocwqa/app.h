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

#ifndef VOCWQA_APP_H_
#define VOCWQA_APP_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vocwqa/engine.h"
#include "vocwqa/grammar.h"
#include "vocwqa/intent.h"
#include "vocwqa/kb.h"
#include "vocwqa/lexicon.h"
#include "vocwqa/query_builder.h"

namespace vocwqa {

// Language resources and query options. Null pointers select the
// compiled-in defaults.
struct AnswerConfig {
  const Lexicon* lexicon = nullptr;
  const Grammar* grammar = nullptr;
  const RuleTargets* targets = nullptr;
  BuildOptions build;
};

enum class AnswerStatus { kOk, kNoParse, kEmptyResult };

// "ok", "no_parse" or "empty".
const char* StatusName(AnswerStatus status);

struct AnswerReport {
  AnswerStatus status = AnswerStatus::kNoParse;
  std::string question;
  std::optional<std::string> rule_id;
  std::optional<std::string> parse_rendering;
  std::optional<std::string> intent_rendering;
  std::optional<std::string> generated_query;
  std::optional<ResultSet> answers;  // absent for kNoParse
  // For kNoParse: token index where analysis stopped, the token there (if
  // any) and what the grammar expected or why the question was rejected.
  std::optional<size_t> failure_position;
  std::string failure_token;
  std::vector<std::string> expected;
  std::string message;
  double elapsed_ms = 0;  // segmentation through evaluation
};

// Runs segment, parse, intent, decomposition, query building and
// evaluation. Never throws: every outcome is encoded in the status.
AnswerReport Answer(std::string_view question, const Graph& graph,
                    const AnswerConfig& config = {});

// Sections in fixed order: status, rule, [parse, intent,] query, answers,
// time. explain adds the parse tree and intent.
std::string FormatReport(const AnswerReport& report, bool explain = false,
                         bool show_time = true);

// The /api/ask response body.
std::string ReportToJson(const AnswerReport& report);

// ---------------------------------------------------------------- suites

struct Expectation {
  enum class Kind { kRule, kAnswers, kNonEmpty, kNoParse, kCount, kEmpty };
  Kind kind = Kind::kNonEmpty;
  std::string rule;                  // kRule
  std::vector<std::string> answers;  // kAnswers, compared as a set
  uint64_t count = 0;                // kCount
};

struct SuiteEntry {
  size_t index = 0;  // 1-based entry number
  size_t line = 0;
  std::string question;
  std::vector<Expectation> expect;
};

class SuiteFormatError : public Error {
 public:
  SuiteFormatError(size_t entry, const std::string& message)
      : Error("suite entry " + std::to_string(entry) + ": " + message), entry_(entry) {}
  size_t entry() const { return entry_; }

 private:
  size_t entry_;
};

// JSON Lines: {"question": "...", "expect": {"kind": "...", "value": ...}}
// where expect may also be a list of such objects. Kinds: rule, answers,
// nonempty, no_parse, count, empty.
std::vector<SuiteEntry> ParseSuite(std::string_view text);
std::vector<SuiteEntry> LoadSuite(const std::filesystem::path& path);

struct CaseResult {
  const SuiteEntry* entry = nullptr;
  bool passed = false;
  std::string reason;  // first failed expectation
  AnswerReport report;
};

struct SuiteResult {
  std::vector<CaseResult> cases;
  size_t passed = 0;
  size_t total = 0;
  double total_ms = 0;  // sum of per-question elapsed_ms

  double average_ms() const { return total == 0 ? 0 : total_ms / total; }
};

// Checks one report against an entry's expectations; returns the failure
// reason or nullopt when all hold.
std::optional<std::string> CheckExpectations(const SuiteEntry& entry,
                                             const AnswerReport& report);

SuiteResult RunSuite(const std::vector<SuiteEntry>& entries, const Graph& graph,
                     const AnswerConfig& config = {});

// One line per case followed by the pass ratio and timing summary.
std::string FormatSuiteResult(const SuiteResult& result);

// Reads questions line by line until EOF or ":quit", printing a report
// for each.
void RunRepl(std::istream& in, std::ostream& out, const Graph& graph,
             const AnswerConfig& config = {}, bool explain = false);

}  // namespace vocwqa

#endif  // VOCWQA_APP_H_

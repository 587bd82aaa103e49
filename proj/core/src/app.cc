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

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vocwqa/parser.h"
#include "vocwqa/text.h"

namespace vocwqa {
namespace {

using nlohmann::json;

std::string Indent(const std::string& text, const std::string& pad) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += pad + line + "\n";
  return out;
}

std::string FormatMs(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

const char* ExpectationName(Expectation::Kind kind) {
  switch (kind) {
    case Expectation::Kind::kRule: return "rule";
    case Expectation::Kind::kAnswers: return "answers";
    case Expectation::Kind::kNonEmpty: return "nonempty";
    case Expectation::Kind::kNoParse: return "no_parse";
    case Expectation::Kind::kCount: return "count";
    case Expectation::Kind::kEmpty: return "empty";
  }
  return "?";
}

Expectation ParseExpectation(const json& e, size_t entry) {
  if (!e.is_object()) throw SuiteFormatError(entry, "expectation must be an object");
  auto kind_it = e.find("kind");
  if (kind_it == e.end() || !kind_it->is_string()) {
    throw SuiteFormatError(entry, "expectation needs a string \"kind\"");
  }
  std::string kind = kind_it->get<std::string>();
  auto value = e.find("value");
  Expectation x;
  if (kind == "rule") {
    x.kind = Expectation::Kind::kRule;
    if (value == e.end() || !value->is_string()) {
      throw SuiteFormatError(entry, "rule expectation needs a string value");
    }
    x.rule = value->get<std::string>();
  } else if (kind == "answers") {
    x.kind = Expectation::Kind::kAnswers;
    if (value == e.end() || !value->is_array()) {
      throw SuiteFormatError(entry, "answers expectation needs a list value");
    }
    for (const auto& v : *value) {
      if (!v.is_string()) throw SuiteFormatError(entry, "answers must be strings");
      x.answers.push_back(ToNfc(v.get<std::string>()));
    }
  } else if (kind == "nonempty") {
    x.kind = Expectation::Kind::kNonEmpty;
  } else if (kind == "no_parse") {
    x.kind = Expectation::Kind::kNoParse;
  } else if (kind == "empty") {
    x.kind = Expectation::Kind::kEmpty;
  } else if (kind == "count") {
    x.kind = Expectation::Kind::kCount;
    if (value == e.end() || !value->is_number_unsigned()) {
      throw SuiteFormatError(entry, "count expectation needs a non-negative integer");
    }
    x.count = value->get<uint64_t>();
  } else {
    throw SuiteFormatError(entry, "unknown expectation kind '" + kind + "'");
  }
  return x;
}

std::string JoinList(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += "\"" + s + "\"";
  }
  return "[" + out + "]";
}

}  // namespace

const char* StatusName(AnswerStatus status) {
  switch (status) {
    case AnswerStatus::kOk: return "ok";
    case AnswerStatus::kNoParse: return "no_parse";
    case AnswerStatus::kEmptyResult: return "empty";
  }
  return "?";
}

AnswerReport Answer(std::string_view question, const Graph& graph, const AnswerConfig& config) {
  const Lexicon& lexicon = config.lexicon ? *config.lexicon : Lexicon::Default();
  const Grammar& grammar = config.grammar ? *config.grammar : Grammar::Default();
  const RuleTargets& targets = config.targets ? *config.targets : RuleTargets::Default();

  AnswerReport r;
  r.question = std::string(question);
  auto start = std::chrono::steady_clock::now();
  auto no_parse = [&](size_t position, const std::vector<Token>& tokens, std::string message) {
    r.status = AnswerStatus::kNoParse;
    r.failure_position = position;
    r.failure_token = position < tokens.size() ? tokens[position].surface : "";
    r.message = std::move(message);
  };
  std::vector<Token> tokens;
  try {
    tokens = Segment(question, lexicon);
    if (tokens.empty()) {
      no_parse(0, tokens, "empty question");
    } else {
      ParseResult parsed = Parse(tokens, grammar);
      if (!parsed.ok()) {
        no_parse(parsed.failure().position, tokens, "no rule matches the question");
        r.expected = parsed.failure().expected;
      } else {
        const ParseTree& tree = parsed.tree();
        r.rule_id = tree.rule_id;
        r.parse_rendering = RenderTree(tree);
        QueryIntent intent = BuildIntent(tree, targets);
        DecomposedIntent decomposed = Decompose(intent);
        r.intent_rendering = RenderDecomposed(decomposed);
        Select query = BuildQuery(decomposed, config.build);
        r.generated_query = Serialize(query);
        ResultSet result = Evaluate(query, graph);
        r.status = !result.is_count() && result.rows.empty() ? AnswerStatus::kEmptyResult
                                                             : AnswerStatus::kOk;
        r.answers = std::move(result);
      }
    }
  } catch (const IntentError& e) {
    no_parse(e.token(), tokens, e.what());
  } catch (const std::exception& e) {
    no_parse(0, tokens, e.what());
    r.answers.reset();
  }
  if (r.status == AnswerStatus::kNoParse) r.answers.reset();
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string FormatReport(const AnswerReport& r, bool explain, bool show_time) {
  std::string out = std::string("status: ") + StatusName(r.status) + "\n";
  if (r.rule_id) out += "rule: " + *r.rule_id + "\n";
  if (r.status == AnswerStatus::kNoParse) {
    out += "position: token " + std::to_string(r.failure_position.value_or(0));
    if (!r.failure_token.empty()) out += " (\"" + r.failure_token + "\")";
    out += "\n";
    if (!r.expected.empty()) {
      std::string list;
      for (const auto& e : r.expected) list += (list.empty() ? "" : ", ") + e;
      out += "expected: " + list + "\n";
    }
    if (!r.message.empty()) out += "message: " + r.message + "\n";
  }
  if (explain && r.parse_rendering) out += "parse:\n" + Indent(*r.parse_rendering, "  ");
  if (explain && r.intent_rendering) out += "intent: " + *r.intent_rendering + "\n";
  if (r.generated_query) out += "query:\n" + Indent(*r.generated_query, "  ");
  if (r.answers) {
    if (r.answers->is_count()) {
      out += "answers: count " + std::to_string(r.answers->count) + "\n";
    } else {
      out += "answers (" + std::to_string(r.answers->rows.size()) + "):\n";
      for (const auto& row : r.answers->rows) out += "  - " + row + "\n";
    }
  }
  if (show_time) out += "time: " + FormatMs(r.elapsed_ms) + " ms\n";
  return out;
}

std::string ReportToJson(const AnswerReport& r) {
  auto opt = [](const std::optional<std::string>& s) -> json {
    return s ? json(*s) : json(nullptr);
  };
  json j;
  j["status"] = StatusName(r.status);
  j["question"] = r.question;
  j["rule_id"] = opt(r.rule_id);
  j["parse_tree"] = opt(r.parse_rendering);
  j["intent"] = opt(r.intent_rendering);
  j["generated_query"] = opt(r.generated_query);
  if (!r.answers) {
    j["answers"] = nullptr;
  } else if (r.answers->is_count()) {
    j["answers"] = {{"count", r.answers->count}};
  } else {
    j["answers"] = r.answers->rows;
  }
  if (r.status == AnswerStatus::kNoParse) {
    j["position"] = r.failure_position.value_or(0);
    j["near"] = r.failure_token;
    j["expected"] = r.expected;
    j["message"] = r.message;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::vector<SuiteEntry> ParseSuite(std::string_view text) {
  std::vector<SuiteEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    SuiteEntry entry;
    entry.index = entries.size() + 1;
    entry.line = line_no;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SuiteFormatError(entry.index, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SuiteFormatError(entry.index, "entry must be an object");
    auto q = j.find("question");
    if (q == j.end() || !q->is_string()) {
      throw SuiteFormatError(entry.index, "entry needs a string \"question\"");
    }
    entry.question = q->get<std::string>();
    auto e = j.find("expect");
    if (e == j.end()) throw SuiteFormatError(entry.index, "entry needs \"expect\"");
    if (e->is_array()) {
      for (const auto& x : *e) entry.expect.push_back(ParseExpectation(x, entry.index));
    } else {
      entry.expect.push_back(ParseExpectation(*e, entry.index));
    }
    if (entry.expect.empty()) throw SuiteFormatError(entry.index, "no expectations");
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<SuiteEntry> LoadSuite(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open suite file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseSuite(buffer.str());
}

std::optional<std::string> CheckExpectations(const SuiteEntry& entry, const AnswerReport& r) {
  for (const Expectation& x : entry.expect) {
    std::string name = ExpectationName(x.kind);
    switch (x.kind) {
      case Expectation::Kind::kRule:
        if (r.rule_id != x.rule) {
          return name + ": expected " + x.rule + ", got " + r.rule_id.value_or("no parse");
        }
        break;
      case Expectation::Kind::kAnswers: {
        std::set<std::string> want(x.answers.begin(), x.answers.end());
        std::set<std::string> got;
        if (r.answers && !r.answers->is_count()) got.insert(r.answers->rows.begin(), r.answers->rows.end());
        if (!r.answers || r.answers->is_count() || want != got) {
          return name + ": expected " + JoinList(x.answers) + ", got " +
                 (r.answers ? RenderResult(*r.answers) : std::string(StatusName(r.status)));
        }
        break;
      }
      case Expectation::Kind::kNonEmpty:
        if (r.status != AnswerStatus::kOk || !r.answers || r.answers->empty()) {
          return name + ": got status " + StatusName(r.status);
        }
        break;
      case Expectation::Kind::kNoParse:
        if (r.status != AnswerStatus::kNoParse) {
          return name + ": parsed as " + r.rule_id.value_or("?");
        }
        break;
      case Expectation::Kind::kCount:
        if (!r.answers || !r.answers->is_count() || r.answers->count != x.count) {
          return name + ": expected " + std::to_string(x.count) + ", got " +
                 (r.answers ? RenderResult(*r.answers) : std::string(StatusName(r.status)));
        }
        break;
      case Expectation::Kind::kEmpty:
        if (r.status != AnswerStatus::kEmptyResult) {
          return name + ": got status " + StatusName(r.status);
        }
        break;
    }
  }
  return std::nullopt;
}

SuiteResult RunSuite(const std::vector<SuiteEntry>& entries, const Graph& graph,
                     const AnswerConfig& config) {
  SuiteResult result;
  for (const SuiteEntry& entry : entries) {
    CaseResult c;
    c.entry = &entry;
    c.report = Answer(entry.question, graph, config);
    auto failure = CheckExpectations(entry, c.report);
    c.passed = !failure;
    c.reason = failure.value_or("");
    result.total_ms += c.report.elapsed_ms;
    result.passed += c.passed ? 1 : 0;
    result.cases.push_back(std::move(c));
  }
  result.total = entries.size();
  return result;
}

std::string FormatSuiteResult(const SuiteResult& result) {
  std::string out;
  for (const CaseResult& c : result.cases) {
    out += c.passed ? "PASS " : "FAIL ";
    out += "#" + std::to_string(c.entry->index) + " ";
    out += c.report.rule_id.value_or("-") + " ";
    out += c.entry->question;
    out += " (" + FormatMs(c.report.elapsed_ms) + " ms)";
    if (!c.passed) out += ": " + c.reason;
    out += "\n";
  }
  double pct = result.total == 0 ? 100.0 : 100.0 * result.passed / result.total;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", pct);
  out += "passed: " + std::to_string(result.passed) + "/" + std::to_string(result.total) + " (" +
         buf + "%)\n";
  out += "total time: " + FormatMs(result.total_ms) + " ms\n";
  out += "average time per question: " + FormatMs(result.average_ms()) + " ms\n";
  return out;
}

void RunRepl(std::istream& in, std::ostream& out, const Graph& graph, const AnswerConfig& config,
             bool explain) {
  std::string line;
  while (true) {
    out << "vocwqa> " << std::flush;
    if (!std::getline(in, line)) break;
    std::string q = Trim(line);
    if (q == ":quit" || q == ":q") break;
    if (q.empty()) continue;
    out << FormatReport(Answer(q, graph, config), explain) << "\n";
  }
}

}  // namespace vocwqa

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

#ifndef VOCWQA_ENGINE_H_
#define VOCWQA_ENGINE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vocwqa/error.h"
#include "vocwqa/kb.h"
#include "vocwqa/query.h"

namespace vocwqa {

class UnboundProjection : public Error {
 public:
  using Error::Error;
};

// Rows: distinct projected values sorted by NFC byte order. Count: number
// of distinct bindings of the counted variable.
struct ResultSet {
  enum class Kind { kRows, kCount };
  Kind kind = Kind::kRows;
  std::vector<std::string> rows;
  uint64_t count = 0;

  static ResultSet Rows(std::vector<std::string> values);  // dedupes and sorts
  static ResultSet Count(uint64_t n) { return {Kind::kCount, {}, n}; }
  bool is_count() const { return kind == Kind::kCount; }
  bool empty() const { return is_count() ? count == 0 : rows.empty(); }
  bool operator==(const ResultSet&) const = default;
};

std::string RenderResult(const ResultSet& result);

// Matcher for the generated filter patterns: optional ^, literal text with
// backslash-escaped metacharacters, optional $. Anything else, such as an
// unescaped metacharacter or a class escape like \d, is rejected with a
// QueryError. Flag "i" compares after case folding.
class LiteralPattern {
 public:
  LiteralPattern(std::string_view pattern, std::string_view flags);
  bool Matches(std::string_view text) const;
  // Same, for text already passed through FoldCase.
  bool MatchesFolded(std::string_view folded_text) const;

 private:
  std::string needle_;
  bool anchored_start_ = false;
  bool anchored_end_ = false;
  bool fold_ = false;
};

// Patterns are matched in written order, each extending the current
// bindings through the graph's (property, bound position) indexes.
// Throws UnboundProjection if the projected variable never occurs.
ResultSet Evaluate(const Select& query, const Graph& graph);

}  // namespace vocwqa

#endif  // VOCWQA_ENGINE_H_

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

#ifndef VOCWQA_ORACLE_H_
#define VOCWQA_ORACLE_H_

#include "vocwqa/engine.h"

namespace vocwqa {

class GuardExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr size_t kOracleMaxTriples = 500;
inline constexpr size_t kOracleMaxGroupVars = 16;

// Reference evaluator for tests. Tries every assignment of each group's
// variables to graph terms (pruned only by already-assigned patterns),
// checks membership against its own triple set and runs filters through
// the ICU regex engine. Throws GuardExceeded above 500 triples or 8
// variables in one group.
ResultSet BruteForceEvaluate(const Select& query, const Graph& graph);

}  // namespace vocwqa

#endif  // VOCWQA_ORACLE_H_

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

#ifndef VOCWQA_QUERY_BUILDER_H_
#define VOCWQA_QUERY_BUILDER_H_

#include <string>
#include <string_view>

#include "vocwqa/intent.h"
#include "vocwqa/query.h"

namespace vocwqa {

class UnsupportedTarget : public Error {
 public:
  using Error::Error;
};

struct BuildOptions {
  std::string dataset{kDefaultDataset};
  // Unanchored filters: "Toan" also matches "Toan cao cấp".
  bool substring_match = false;
};

// Escapes regex metacharacters and wraps the result as ^...$.
std::string EscapeLiteral(std::string_view value);
// Escapes regex metacharacters only.
std::string EscapeRegex(std::string_view value);

// Projection variable of a target's query, e.g. "authorname".
std::string ProjectionVar(Target target);

// One single-valued intent as a flat query.
Select BuildSingleQuery(const QueryIntent& intent, const BuildOptions& options = {});

// And-chain: the first part as the outer query with the rest nested as
// subqueries joined on the projection variable. Or-union: the parts as
// left-nested UNION branches. Output always passes Validate().
Select BuildQuery(const DecomposedIntent& decomposed, const BuildOptions& options = {});

}  // namespace vocwqa

#endif  // VOCWQA_QUERY_BUILDER_H_

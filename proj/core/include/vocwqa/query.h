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

#ifndef VOCWQA_QUERY_H_
#define VOCWQA_QUERY_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vocwqa/error.h"
#include "vocwqa/kb.h"

namespace vocwqa {

inline constexpr std::string_view kDefaultDataset = "http://localhost/owl_test/vocw_full.owl";

class QueryError : public Error {
 public:
  using Error::Error;
};

// ?subject property ?object. Variable names are stored without the '?'.
// The subject class restricts which entities the subject may bind to and
// gives the printed prefix (cs_author:write).
struct TriplePattern {
  std::string subject;
  Property property = Property::kContent;
  std::string object;
  Class subject_class = Class::kCourse;

  bool operator==(const TriplePattern&) const = default;
};

// FILTER regex(?var , "pattern", "flags")
struct Filter {
  std::string var;
  std::string pattern;
  std::string flags;

  bool operator==(const Filter&) const = default;
};

struct Union;
struct SubSelect;

using Element = std::variant<TriplePattern, Filter, Union, SubSelect>;

struct GroupPattern {
  std::vector<Element> elements;
  bool operator==(const GroupPattern&) const;
};

struct Union {
  std::shared_ptr<GroupPattern> left;
  std::shared_ptr<GroupPattern> right;

  Union() = default;
  Union(GroupPattern l, GroupPattern r)
      : left(std::make_shared<GroupPattern>(std::move(l))),
        right(std::make_shared<GroupPattern>(std::move(r))) {}
  bool operator==(const Union& other) const;
};

struct Projection {
  enum class Kind { kVar, kCountDistinct };
  Kind kind = Kind::kVar;
  std::string var;  // the projected or counted variable

  static Projection Var(std::string name) { return {Kind::kVar, std::move(name)}; }
  static Projection CountDistinct(std::string name) {
    return {Kind::kCountDistinct, std::move(name)};
  }
  bool is_count() const { return kind == Kind::kCountDistinct; }
  bool operator==(const Projection&) const = default;
};

struct Select {
  bool distinct = true;
  Projection projection;
  std::string dataset{kDefaultDataset};
  GroupPattern where;

  bool operator==(const Select&) const = default;
};

struct SubSelect {
  std::shared_ptr<Select> select;

  SubSelect() = default;
  explicit SubSelect(Select s) : select(std::make_shared<Select>(std::move(s))) {}
  bool operator==(const SubSelect& other) const;
};

// Throws QueryError unless: the projection variable occurs in the group;
// every Filter follows a TriplePattern binding its variable in the same
// group; every SubSelect projects a plain variable that also occurs in the
// enclosing group.
void Validate(const Select& query);

// Nesting depth: 1 for a flat query, +1 per SubSelect level.
int Depth(const Select& query);

// Deterministic text form. A Filter directly after the pattern binding its
// variable is printed inside that pattern's braces; elements are separated
// by '.'; nested blocks are indented four spaces per level.
std::string Serialize(const Select& query);

// Reads the text produced by Serialize. Throws QueryError with the byte
// offset on malformed input.
Select ReadQuery(std::string_view text);

}  // namespace vocwqa

#endif  // VOCWQA_QUERY_H_

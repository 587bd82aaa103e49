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

#include "vocwqa/query_builder.h"

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace vocwqa {
namespace {

QueryIntent Intent(Target target, std::map<Slot, SlotValue> slots) {
  QueryIntent i;
  i.target = target;
  i.slots = std::move(slots);
  return i;
}

int CountUnions(const GroupPattern& g) {
  int n = 0;
  for (const Element& e : g.elements) {
    if (const auto* u = std::get_if<Union>(&e)) n += 1 + CountUnions(*u->left) + CountUnions(*u->right);
  }
  return n;
}

void CollectFilters(const GroupPattern& g, std::vector<Filter>* out) {
  for (const Element& e : g.elements) {
    if (const auto* f = std::get_if<Filter>(&e)) out->push_back(*f);
    if (const auto* u = std::get_if<Union>(&e)) {
      CollectFilters(*u->left, out);
      CollectFilters(*u->right, out);
    }
    if (const auto* s = std::get_if<SubSelect>(&e)) CollectFilters(s->select->where, out);
  }
}

TEST(QueryBuilderTest, EscapeLiteral) {
  EXPECT_EQ(EscapeLiteral("Toan"), "^Toan$");
  EXPECT_EQ(EscapeLiteral("C++ (nâng cao)"), "^C\\+\\+ \\(nâng cao\\)$");
  EXPECT_EQ(EscapeLiteral(""), "^$");
  EXPECT_EQ(EscapeLiteral("a.b|c?*[]{}^$\\"), "^a\\.b\\|c\\?\\*\\[\\]\\{\\}\\^\\$\\\\$");
}

TEST(QueryBuilderTest, AuthorOfTitle) {
  Select q = BuildSingleQuery(Intent(Target::kAuthor, {{Slot::kTitle, SlotValue::Single("Toan")}}));
  GroupPattern want;
  want.elements = {
      TriplePattern{"author", Property::kContent, "authorname", Class::kAuthor},
      TriplePattern{"author", Property::kWrite, "course", Class::kAuthor},
      TriplePattern{"course", Property::kContent, "coursename", Class::kCourse},
      Filter{"coursename", "^Toan$", "i"},
  };
  EXPECT_EQ(q.projection, Projection::Var("authorname"));
  EXPECT_EQ(q.where, want);
  EXPECT_TRUE(Serialize(q).starts_with("SELECT DISTINCT ?authorname\n"));
}

TEST(QueryBuilderTest, YearSlotAddsYearPatterns) {
  Select q = BuildSingleQuery(Intent(
      Target::kAuthor,
      {{Slot::kTitle, SlotValue::Single("Toan")}, {Slot::kYear, SlotValue::Single("2009")}}));
  const auto& els = q.where.elements;
  auto has = [&](const Element& e) { return std::find(els.begin(), els.end(), e) != els.end(); };
  EXPECT_TRUE(has(TriplePattern{"year", Property::kContent, "yearname", Class::kYear}));
  EXPECT_TRUE(has(Filter{"yearname", "^2009$", "i"}));
  EXPECT_TRUE(has(TriplePattern{"course", Property::kIsWrittenIn, "year", Class::kCourse}));
}

TEST(QueryBuilderTest, ProjectionPerTarget) {
  EXPECT_EQ(ProjectionVar(Target::kAuthor), "authorname");
  EXPECT_EQ(ProjectionVar(Target::kPublisher), "publishername");
  EXPECT_EQ(ProjectionVar(Target::kYearOfWriting), "yearname");
  EXPECT_EQ(ProjectionVar(Target::kYearOfPublishing), "yearname");
  EXPECT_EQ(ProjectionVar(Target::kSubject), "subjectname");
  EXPECT_EQ(ProjectionVar(Target::kBookList), "coursename");
  EXPECT_EQ(ProjectionVar(Target::kPlaceOfPublication), "placename");
  EXPECT_EQ(ProjectionVar(Target::kPlaceOfPublisher), "placename");
  EXPECT_EQ(ProjectionVar(Target::kPrice), "pricename");
  Select q = BuildSingleQuery(Intent(Target::kCountBooks, {}));
  EXPECT_TRUE(q.projection.is_count());
  EXPECT_TRUE(Serialize(q).starts_with("SELECT (COUNT(DISTINCT ?course) AS ?count)\n"));
}

TEST(QueryBuilderTest, AndChainNestsToArity) {
  for (size_t m = 2; m <= 4; ++m) {
    std::vector<std::string> titles;
    for (size_t k = 0; k < m; ++k) titles.push_back("T" + std::to_string(k));
    QueryIntent i =
        Intent(Target::kAuthor, {{Slot::kTitle, SlotValue::Multi(Connective::kAnd, titles)}});
    Select q = BuildQuery(Decompose(i));
    EXPECT_EQ(Depth(q), static_cast<int>(m));
    std::string text = Serialize(q);
    size_t selects = 0;
    for (size_t p = text.find("SELECT DISTINCT"); p != std::string::npos;
         p = text.find("SELECT DISTINCT", p + 1)) {
      ++selects;
    }
    EXPECT_EQ(selects, m);
  }
}

TEST(QueryBuilderTest, OrSetHasOneBranchPerValue) {
  for (size_t m = 2; m <= 4; ++m) {
    std::vector<std::string> titles;
    for (size_t k = 0; k < m; ++k) titles.push_back("T" + std::to_string(k));
    QueryIntent i =
        Intent(Target::kBookList, {{Slot::kAuthor, SlotValue::Multi(Connective::kOr, titles)}});
    Select q = BuildQuery(Decompose(i));
    EXPECT_EQ(CountUnions(q.where) + 1, static_cast<int>(m));
  }
}

TEST(QueryBuilderTest, NestedAndMatchesGolden) {
  QueryIntent i = Intent(Target::kAuthor,
                         {{Slot::kTitle, SlotValue::Multi(Connective::kAnd, {"Toan", "Van"})}});
  std::string golden = testing::ReadFile(testing::TestDataDir() / "nested_and_query.golden");
  EXPECT_EQ(testing::StripWhitespace(Serialize(BuildQuery(Decompose(i)))),
            testing::StripWhitespace(golden));
}

TEST(QueryBuilderTest, GeneratedQueriesAreWellFormedAndAnchored) {
  std::mt19937 rng(3);
  for (int n = 0; n < 300; ++n) {
    QueryIntent i = testing::RandomIntent(rng);
    Select q = BuildQuery(Decompose(i));
    EXPECT_NO_THROW(Validate(q)) << RenderIntent(i);
    std::vector<Filter> filters;
    CollectFilters(q.where, &filters);
    for (const Filter& f : filters) {
      EXPECT_TRUE(f.pattern.starts_with("^") && f.pattern.ends_with("$")) << f.pattern;
      EXPECT_EQ(f.flags, "i");
    }
  }
}

TEST(QueryBuilderTest, SubstringModeDropsAnchors) {
  BuildOptions options;
  options.substring_match = true;
  Select q = BuildSingleQuery(Intent(Target::kAuthor, {{Slot::kTitle, SlotValue::Single("Toan")}}),
                              options);
  EXPECT_EQ(std::get<Filter>(q.where.elements.back()).pattern, "Toan");
}

TEST(QueryBuilderTest, PlaceOfPublisherLinksThroughLocatedAt) {
  Select q = BuildSingleQuery(
      Intent(Target::kPlaceOfPublisher, {{Slot::kPublisher, SlotValue::Single("Giáo Dục")}}));
  const auto& els = q.where.elements;
  EXPECT_NE(std::find(els.begin(), els.end(),
                      Element{TriplePattern{"publisher", Property::kLocatedAt, "place",
                                            Class::kPublisher}}),
            els.end());
  EXPECT_EQ(std::find(els.begin(), els.end(),
                      Element{TriplePattern{"publisher", Property::kPublish, "course",
                                            Class::kPublisher}}),
            els.end());
}

TEST(QueryBuilderTest, InvalidIntentIsUnsupported) {
  QueryIntent i = Intent(Target::kAuthor, {{Slot::kAuthor, SlotValue::Single("An")}});
  EXPECT_THROW(BuildQuery(Decompose(i)), UnsupportedTarget);
  DecomposedIntent empty;
  EXPECT_THROW(BuildQuery(empty), UnsupportedTarget);
}

}  // namespace
}  // namespace vocwqa

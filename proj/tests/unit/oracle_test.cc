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

#include "vocwqa/oracle.h"

#include <gtest/gtest.h>

#include "test_support.h"
#include "vocwqa/query_builder.h"

namespace vocwqa {
namespace {

// Two authors: Nguyen wrote Toan and Van, Tran wrote Toan only.
Graph SmallGraph() {
  Graph g;
  EntityId nguyen = g.AddEntity(Class::kAuthor, "Nguyen");
  EntityId tran = g.AddEntity(Class::kAuthor, "Tran");
  EntityId toan = g.AddEntity(Class::kCourse, "k1", "Toan");
  EntityId van = g.AddEntity(Class::kCourse, "k2", "Van");
  g.Insert(nguyen, Property::kWrite, toan);
  g.Insert(nguyen, Property::kWrite, van);
  g.Insert(tran, Property::kWrite, toan);
  return g;
}

Select TitlesQuery(Target target, Connective c, std::vector<std::string> titles) {
  QueryIntent i;
  i.target = target;
  i.slots.emplace(Slot::kTitle, SlotValue::Multi(c, std::move(titles)));
  return BuildQuery(Decompose(i));
}

TEST(OracleTest, NestedAndQuery) {
  Select q = TitlesQuery(Target::kAuthor, Connective::kAnd, {"Toan", "Van"});
  EXPECT_EQ(BruteForceEvaluate(q, SmallGraph()), ResultSet::Rows({"Nguyen"}));
}

TEST(OracleTest, OrUnion) {
  Select q = TitlesQuery(Target::kAuthor, Connective::kOr, {"Toan", "Van"});
  EXPECT_EQ(BruteForceEvaluate(q, SmallGraph()), ResultSet::Rows({"Nguyen", "Tran"}));
}

TEST(OracleTest, CaseInsensitiveFilter) {
  QueryIntent i;
  i.target = Target::kAuthor;
  i.slots.emplace(Slot::kTitle, SlotValue::Single("VAN"));
  EXPECT_EQ(BruteForceEvaluate(BuildQuery(Decompose(i)), SmallGraph()), ResultSet::Rows({"Nguyen"}));
}

TEST(OracleTest, CountOverCourses) {
  QueryIntent i;
  i.target = Target::kCountBooks;
  i.slots.emplace(Slot::kAuthor, SlotValue::Single("nguyen"));
  EXPECT_EQ(BruteForceEvaluate(BuildQuery(Decompose(i)), SmallGraph()), ResultSet::Count(2));
}

TEST(OracleTest, EmptyGraph) {
  Graph empty;
  EXPECT_EQ(BruteForceEvaluate(TitlesQuery(Target::kAuthor, Connective::kAnd, {"a", "b"}), empty),
            ResultSet::Rows({}));
  QueryIntent i;
  i.target = Target::kCountBooks;
  EXPECT_EQ(BruteForceEvaluate(BuildQuery(Decompose(i)), empty), ResultSet::Count(0));
}

TEST(OracleTest, GuardOnGraphSize) {
  Graph g;
  EntityId a = g.AddEntity(Class::kAuthor, "A");
  while (g.triple_count() <= kOracleMaxTriples) {
    EntityId c = g.AddEntity(Class::kCourse, "c" + std::to_string(g.triple_count()), "x");
    g.Insert(a, Property::kWrite, c);
  }
  EXPECT_EQ(g.triple_count(), kOracleMaxTriples + 1);
  EXPECT_THROW(BruteForceEvaluate(TitlesQuery(Target::kAuthor, Connective::kOr, {"x", "y"}), g),
               GuardExceeded);
}

TEST(OracleTest, GuardOnVariableCount) {
  Select q;
  q.projection = Projection::Var("v0");
  for (int k = 0; k < 17; ++k) {
    q.where.elements.push_back(TriplePattern{"v" + std::to_string(k), Property::kWrite,
                                             "v" + std::to_string(k + 1), Class::kAuthor});
  }
  EXPECT_THROW(BruteForceEvaluate(q, SmallGraph()), GuardExceeded);
}

TEST(OracleTest, EscapedMetacharactersMatchLiterally) {
  Graph g;
  EntityId a = g.AddEntity(Class::kAuthor, "A");
  EntityId c = g.AddEntity(Class::kCourse, "k1", "C++ (nâng cao)");
  EntityId d = g.AddEntity(Class::kCourse, "k2", "CCC (nâng cao)");
  g.Insert(a, Property::kWrite, c);
  EntityId b = g.AddEntity(Class::kAuthor, "B");
  g.Insert(b, Property::kWrite, d);
  QueryIntent i;
  i.target = Target::kAuthor;
  i.slots.emplace(Slot::kTitle, SlotValue::Single("C++ (nâng cao)"));
  EXPECT_EQ(BruteForceEvaluate(BuildQuery(Decompose(i)), g), ResultSet::Rows({"A"}));
}

}  // namespace
}  // namespace vocwqa

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

#include <algorithm>

namespace vocwqa {
namespace {

constexpr std::string_view kMeta = "\\^$.|?*+()[]{}";

// Variable names per entity class: ?author / ?authorname and so on.
struct Node {
  Class cls;
  const char* var;
  const char* name_var;
};

constexpr Node kAuthor{Class::kAuthor, "author", "authorname"};
constexpr Node kCourse{Class::kCourse, "course", "coursename"};
constexpr Node kPublisher{Class::kPublisher, "publisher", "publishername"};
constexpr Node kYear{Class::kYear, "year", "yearname"};
constexpr Node kSubject{Class::kSubject, "subject", "subjectname"};
constexpr Node kPlace{Class::kPlace, "place", "placename"};
constexpr Node kPrice{Class::kPrice, "price", "pricename"};

class GroupBuilder {
 public:
  explicit GroupBuilder(const BuildOptions& options) : options_(options) {}

  void Content(const Node& node) {
    Add({node.var, Property::kContent, node.name_var, node.cls});
  }

  void Constrain(const Node& node, const std::string& value) {
    TriplePattern content{node.var, Property::kContent, node.name_var, node.cls};
    Filter filter{node.name_var,
                  options_.substring_match ? EscapeRegex(value) : EscapeLiteral(value), "i"};
    auto it = Find(content);
    if (it == group_.elements.end()) {
      group_.elements.push_back(content);
      group_.elements.push_back(filter);
    } else {
      group_.elements.insert(it + 1, filter);
    }
  }

  void Link(const Node& subject, Property property, const Node& object) {
    Add({subject.var, property, object.var, subject.cls});
  }

  GroupPattern Take() { return std::move(group_); }

 private:
  std::vector<Element>::iterator Find(const TriplePattern& t) {
    return std::find_if(group_.elements.begin(), group_.elements.end(), [&](const Element& e) {
      const auto* p = std::get_if<TriplePattern>(&e);
      return p != nullptr && *p == t;
    });
  }

  void Add(TriplePattern t) {
    if (Find(t) == group_.elements.end()) group_.elements.push_back(std::move(t));
  }

  const BuildOptions& options_;
  GroupPattern group_;
};

bool UsesCourse(const QueryIntent& intent) {
  for (const auto& [slot, value] : intent.slots) {
    if (slot != Slot::kPublisher) return true;
  }
  return false;
}

GroupPattern BuildGroup(const QueryIntent& intent, const BuildOptions& options) {
  if (!intent.IsValid()) throw UnsupportedTarget("intent is not valid: " + RenderIntent(intent));
  for (const auto& [slot, value] : intent.slots) {
    if (value.is_multi()) throw UnsupportedTarget("multi-valued slot in a single query");
  }
  GroupBuilder b(options);
  switch (intent.target) {
    case Target::kAuthor:
      b.Content(kAuthor);
      b.Link(kAuthor, Property::kWrite, kCourse);
      break;
    case Target::kPublisher:
      b.Content(kPublisher);
      b.Link(kPublisher, Property::kPublish, kCourse);
      break;
    case Target::kYearOfWriting:
    case Target::kYearOfPublishing:
      b.Content(kYear);
      b.Link(kCourse, Property::kIsWrittenIn, kYear);
      break;
    case Target::kSubject:
      b.Content(kSubject);
      b.Link(kCourse, Property::kHasSubject, kSubject);
      break;
    case Target::kBookList:
    case Target::kCountBooks:
      b.Content(kCourse);
      break;
    case Target::kPlaceOfPublication:
      b.Content(kPlace);
      b.Link(kCourse, Property::kPublishedAt, kPlace);
      break;
    case Target::kPlaceOfPublisher:
      b.Content(kPlace);
      b.Link(kPublisher, Property::kLocatedAt, kPlace);
      break;
    case Target::kPrice:
      b.Content(kPrice);
      b.Link(kCourse, Property::kHasPrice, kPrice);
      break;
  }
  for (const auto& [slot, value] : intent.slots) {
    const std::string& v = value.single();
    switch (slot) {
      case Slot::kAuthor:
        b.Constrain(kAuthor, v);
        b.Link(kAuthor, Property::kWrite, kCourse);
        break;
      case Slot::kPublisher:
        b.Constrain(kPublisher, v);
        if (intent.target != Target::kPlaceOfPublisher || UsesCourse(intent)) {
          b.Link(kPublisher, Property::kPublish, kCourse);
        }
        break;
      case Slot::kYear:
        b.Constrain(kYear, v);
        b.Link(kCourse, Property::kIsWrittenIn, kYear);
        break;
      case Slot::kSubject:
        b.Constrain(kSubject, v);
        b.Link(kCourse, Property::kHasSubject, kSubject);
        break;
      case Slot::kPlace:
        b.Constrain(kPlace, v);
        b.Link(kCourse, Property::kPublishedAt, kPlace);
        break;
      case Slot::kTitle:
        b.Constrain(kCourse, v);
        break;
    }
  }
  if (intent.target == Target::kPlaceOfPublisher && UsesCourse(intent) &&
      intent.slots.count(Slot::kPublisher) == 0) {
    b.Link(kPublisher, Property::kPublish, kCourse);
  }
  return b.Take();
}

Projection ProjectionFor(Target target) {
  if (target == Target::kCountBooks) return Projection::CountDistinct(kCourse.var);
  return Projection::Var(ProjectionVar(target));
}

}  // namespace

std::string EscapeRegex(std::string_view value) {
  std::string out;
  for (char c : value) {
    if (kMeta.find(c) != std::string_view::npos) out += '\\';
    out += c;
  }
  return out;
}

std::string EscapeLiteral(std::string_view value) { return "^" + EscapeRegex(value) + "$"; }

std::string ProjectionVar(Target target) {
  switch (target) {
    case Target::kAuthor: return kAuthor.name_var;
    case Target::kPublisher: return kPublisher.name_var;
    case Target::kYearOfWriting:
    case Target::kYearOfPublishing: return kYear.name_var;
    case Target::kSubject: return kSubject.name_var;
    case Target::kBookList: return kCourse.name_var;
    case Target::kPlaceOfPublication:
    case Target::kPlaceOfPublisher: return kPlace.name_var;
    case Target::kPrice: return kPrice.name_var;
    case Target::kCountBooks: return kCourse.var;
  }
  throw UnsupportedTarget("unknown target");
}

Select BuildSingleQuery(const QueryIntent& intent, const BuildOptions& options) {
  Select q;
  q.projection = ProjectionFor(intent.target);
  q.dataset = options.dataset;
  q.where = BuildGroup(intent, options);
  return q;
}

Select BuildQuery(const DecomposedIntent& d, const BuildOptions& options) {
  if (d.parts.empty()) throw UnsupportedTarget("no intent to build");
  Target target = d.parts.front().target;
  for (const auto& part : d.parts) {
    if (part.target != target) throw UnsupportedTarget("parts disagree on the target");
  }
  Select q;
  switch (d.kind) {
    case DecomposedIntent::Kind::kSingle:
      q = BuildSingleQuery(d.parts.front(), options);
      break;
    case DecomposedIntent::Kind::kAndChain: {
      // Innermost first. Nested queries project the joined variable
      // directly, so a count chain joins on ?course.
      Select inner;
      for (size_t i = d.parts.size(); i-- > 0;) {
        Select level = BuildSingleQuery(d.parts[i], options);
        if (i != 0) level.projection = Projection::Var(ProjectionVar(target));
        if (i + 1 < d.parts.size()) level.where.elements.push_back(SubSelect(std::move(inner)));
        inner = std::move(level);
      }
      q = std::move(inner);
      break;
    }
    case DecomposedIntent::Kind::kOrUnion: {
      GroupPattern acc = BuildGroup(d.parts[0], options);
      for (size_t i = 1; i < d.parts.size(); ++i) {
        GroupPattern merged;
        merged.elements.push_back(Union(std::move(acc), BuildGroup(d.parts[i], options)));
        acc = std::move(merged);
      }
      if (d.parts.size() == 1) {
        q = BuildSingleQuery(d.parts[0], options);
        break;
      }
      q.projection = ProjectionFor(target);
      q.dataset = options.dataset;
      q.where = std::move(acc);
      break;
    }
  }
  Validate(q);
  return q;
}

}  // namespace vocwqa

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

#include "vocwqa/kb.h"

#include <algorithm>

#include "vocwqa/text.h"

namespace vocwqa {
namespace {

constexpr std::array<PropertyInfo, kNumProperties> kProperties = {{
    {Property::kWrite, "write", Class::kAuthor, Class::kCourse},
    {Property::kIsWrittenBy, "isWrittenBy", Class::kCourse, Class::kAuthor},
    {Property::kPublish, "publish", Class::kPublisher, Class::kCourse},
    {Property::kIsPublishedBy, "isPublishedBy", Class::kCourse, Class::kPublisher},
    {Property::kIsWrittenIn, "isWrittenIn", Class::kCourse, Class::kYear},
    {Property::kHasSubject, "hasSubject", Class::kCourse, Class::kSubject},
    {Property::kPublishedAt, "publishedAt", Class::kCourse, Class::kPlace},
    {Property::kLocatedAt, "locatedAt", Class::kPublisher, Class::kPlace},
    {Property::kHasPrice, "hasPrice", Class::kCourse, Class::kPrice},
    {Property::kContent, "content", std::nullopt, std::nullopt},
}};

constexpr std::array<std::pair<Property, Property>, 2> kInversePairs = {{
    {Property::kWrite, Property::kIsWrittenBy},
    {Property::kPublish, Property::kIsPublishedBy},
}};

struct ClassNames {
  Class cls;
  std::string_view name;
  std::string_view prefix;
};

constexpr std::array<ClassNames, kNumClasses> kClasses = {{
    {Class::kAuthor, "Author", "cs_author"},
    {Class::kCourse, "Course", "cs_name"},
    {Class::kPublisher, "Publisher", "cs_publisher"},
    {Class::kYear, "Year", "cs_created"},
    {Class::kSubject, "Subject", "cs_subject"},
    {Class::kPlace, "Place", "cs_place"},
    {Class::kPrice, "Price", "cs_price"},
}};

uint64_t SubjectKey(Property p, EntityId s) {
  return (uint64_t{static_cast<uint8_t>(p)} << 40) | s;
}

uint64_t ObjectKey(Property p, const Term& o) {
  return (uint64_t{static_cast<uint8_t>(p)} << 40) | o.Pack();
}

std::span<const uint32_t> Lookup(const std::unordered_map<uint64_t, std::vector<uint32_t>>& index,
                                 uint64_t key) {
  auto it = index.find(key);
  if (it == index.end()) return {};
  return it->second;
}

}  // namespace

const PropertyInfo& Describe(Property property) {
  return kProperties[static_cast<size_t>(property)];
}

std::span<const PropertyInfo> AllProperties() { return kProperties; }

std::span<const std::pair<Property, Property>> InversePairs() { return kInversePairs; }

const char* ClassName(Class cls) { return kClasses[static_cast<size_t>(cls)].name.data(); }

const char* PropertyName(Property property) { return Describe(property).name.data(); }

bool ParseProperty(std::string_view name, Property* property) {
  for (const auto& info : kProperties) {
    if (info.name == name) {
      *property = info.property;
      return true;
    }
  }
  return false;
}

bool ParseClass(std::string_view name, Class* cls) {
  for (const auto& c : kClasses) {
    if (c.name == name) {
      *cls = c.cls;
      return true;
    }
  }
  return false;
}

std::string_view ClassPrefix(Class cls) { return kClasses[static_cast<size_t>(cls)].prefix; }

bool ParseClassPrefix(std::string_view prefix, Class* cls) {
  for (const auto& c : kClasses) {
    if (c.prefix == prefix) {
      *cls = c.cls;
      return true;
    }
  }
  return false;
}

Graph::TripleKey Graph::Key(const Triple& t) {
  return {(uint64_t{t.subject} << 8) | static_cast<uint8_t>(t.property), t.object.Pack()};
}

std::string Graph::EntityKey(Class cls, std::string_view identity) {
  std::string key(1, static_cast<char>('0' + static_cast<int>(cls)));
  key += FoldCase(identity);
  return key;
}

EntityId Graph::DeclareEntity(Class cls, std::string_view identity) {
  std::string key = EntityKey(cls, identity);
  auto it = entity_index_.find(key);
  if (it != entity_index_.end()) return it->second;
  EntityId id = static_cast<EntityId>(entities_.size());
  entities_.push_back({cls, key.substr(1)});
  entity_index_.emplace(std::move(key), id);
  return id;
}

EntityId Graph::AddEntity(Class cls, std::string_view content) {
  return AddEntity(cls, content, content);
}

EntityId Graph::AddEntity(Class cls, std::string_view identity, std::string_view content) {
  EntityId id = DeclareEntity(cls, identity);
  if (WithSubject(Property::kContent, id).empty()) {
    InsertLiteral(id, Property::kContent, content);
  }
  return id;
}

std::optional<EntityId> Graph::FindEntity(Class cls, std::string_view identity) const {
  auto it = entity_index_.find(EntityKey(cls, identity));
  if (it == entity_index_.end()) return std::nullopt;
  return it->second;
}

uint32_t Graph::InternLiteral(std::string_view text) {
  std::string nfc = ToNfc(text);
  auto it = literal_index_.find(nfc);
  if (it != literal_index_.end()) return it->second;
  uint32_t id = static_cast<uint32_t>(literals_.size());
  folded_.push_back(FoldCase(nfc));
  literals_.push_back(nfc);
  literal_index_.emplace(std::move(nfc), id);
  return id;
}

std::optional<uint32_t> Graph::FindLiteral(std::string_view text) const {
  auto it = literal_index_.find(ToNfc(text));
  if (it == literal_index_.end()) return std::nullopt;
  return it->second;
}

void Graph::CheckSchema(const Triple& triple) const {
  const PropertyInfo& info = Describe(triple.property);
  if (triple.subject >= entities_.size()) {
    throw ConsistencyError(triple.property, "unknown subject entity");
  }
  Class subject_class = EntityClass(triple.subject);
  if (info.domain && *info.domain != subject_class) {
    throw ConsistencyError(triple.property, std::string("domain=") + ClassName(*info.domain) +
                                                ", subject is " + ClassName(subject_class));
  }
  if (!info.range) {
    if (!triple.object.is_literal()) {
      throw ConsistencyError(triple.property, "range=Literal, object is an entity");
    }
    return;
  }
  if (triple.object.is_literal()) {
    throw ConsistencyError(triple.property,
                           std::string("range=") + ClassName(*info.range) + ", object is a literal");
  }
  if (triple.object.id >= entities_.size()) {
    throw ConsistencyError(triple.property, "unknown object entity");
  }
  Class object_class = EntityClass(triple.object.id);
  if (object_class != *info.range) {
    throw ConsistencyError(triple.property, std::string("range=") + ClassName(*info.range) +
                                                ", object is " + ClassName(object_class));
  }
}

bool Graph::Insert(const Triple& triple) {
  CheckSchema(triple);
  return InsertUnchecked(triple);
}

bool Graph::Insert(EntityId subject, Property property, EntityId object) {
  return Insert(Triple{subject, property, Term::Entity(object)});
}

bool Graph::InsertLiteral(EntityId subject, Property property, std::string_view literal) {
  if (Describe(property).range) {
    // Report the violation without polluting the literal pool.
    throw ConsistencyError(property, std::string("range=") +
                                         ClassName(*Describe(property).range) +
                                         ", object is a literal");
  }
  return Insert(Triple{subject, property, Term::Literal(InternLiteral(literal))});
}

bool Graph::InsertUnchecked(const Triple& triple) {
  if (!triple_set_.insert(Key(triple)).second) return false;
  uint32_t index = static_cast<uint32_t>(triples_.size());
  triples_.push_back(triple);
  by_property_[static_cast<size_t>(triple.property)].push_back(index);
  by_subject_[SubjectKey(triple.property, triple.subject)].push_back(index);
  by_object_[ObjectKey(triple.property, triple.object)].push_back(index);
  return true;
}

size_t Graph::CountClass(Class cls) const {
  return static_cast<size_t>(std::count_if(entities_.begin(), entities_.end(),
                                           [&](const EntityRecord& e) { return e.cls == cls; }));
}

std::string_view Graph::Content(EntityId id) const {
  auto hits = WithSubject(Property::kContent, id);
  if (hits.empty()) return {};
  const Term& object = triples_[hits.front()].object;
  return object.is_literal() ? std::string_view(literals_[object.id]) : std::string_view();
}

std::string_view Graph::TermText(const Term& term) const {
  return term.is_literal() ? std::string_view(literals_[term.id]) : Content(term.id);
}

std::span<const uint32_t> Graph::WithProperty(Property property) const {
  return by_property_[static_cast<size_t>(property)];
}

std::span<const uint32_t> Graph::WithSubject(Property property, EntityId subject) const {
  return Lookup(by_subject_, SubjectKey(property, subject));
}

std::span<const uint32_t> Graph::WithObject(Property property, const Term& object) const {
  return Lookup(by_object_, ObjectKey(property, object));
}

size_t ApplyInference(Graph& graph) {
  size_t added = 0;
  for (const auto& [forward, backward] : InversePairs()) {
    for (auto [from, to] : {std::pair{forward, backward}, std::pair{backward, forward}}) {
      // Copy: insertion grows the index being walked.
      std::vector<uint32_t> positions(graph.WithProperty(from).begin(),
                                      graph.WithProperty(from).end());
      for (uint32_t pos : positions) {
        Triple t = graph.triples()[pos];
        if (t.object.is_literal()) continue;
        if (graph.Insert(t.object.id, to, t.subject)) ++added;
      }
    }
  }
  return added;
}

std::vector<Violation> CheckConsistency(const Graph& graph) {
  std::vector<Violation> out;
  for (const Triple& t : graph.triples()) {
    const PropertyInfo& info = Describe(t.property);
    Class sc = graph.EntityClass(t.subject);
    if (info.domain && *info.domain != sc) {
      out.push_back({Violation::Kind::kDomain, t.subject, t.property,
                     std::string(info.name) + " expects subject " + ClassName(*info.domain) +
                         ", got " + ClassName(sc)});
    }
    bool range_ok = info.range ? (!t.object.is_literal() &&
                                  graph.EntityClass(t.object.id) == *info.range)
                               : t.object.is_literal();
    if (!range_ok) {
      out.push_back({Violation::Kind::kRange, t.subject, t.property,
                     std::string(info.name) + " expects object " +
                         (info.range ? ClassName(*info.range) : "Literal")});
    }
  }
  for (EntityId id = 0; id < graph.entity_count(); ++id) {
    size_t n = graph.WithSubject(Property::kContent, id).size();
    if (n == 1) continue;
    out.push_back({n == 0 ? Violation::Kind::kMissingContent : Violation::Kind::kMultipleContent,
                   id, Property::kContent,
                   std::string(ClassName(graph.EntityClass(id))) + " '" +
                       graph.EntityIdentity(id) + "' has " + std::to_string(n) +
                       " content literals"});
  }
  return out;
}

std::set<std::string> CanonicalTriples(const Graph& graph) {
  auto entity = [&](EntityId id) {
    return std::string(ClassName(graph.EntityClass(id))) + ":" + graph.EntityIdentity(id);
  };
  std::set<std::string> out;
  for (const Triple& t : graph.triples()) {
    std::string object = t.object.is_literal() ? "\"" + graph.Literal(t.object.id) + "\""
                                               : entity(t.object.id);
    out.insert(entity(t.subject) + "|" + PropertyName(t.property) + "|" + object);
  }
  return out;
}

}  // namespace vocwqa

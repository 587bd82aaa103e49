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

#ifndef VOCWQA_KB_H_
#define VOCWQA_KB_H_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vocwqa/error.h"

namespace vocwqa {

enum class Class : uint8_t {
  kAuthor,
  kCourse,
  kPublisher,
  kYear,
  kSubject,
  kPlace,
  kPrice,
};
inline constexpr int kNumClasses = 7;

enum class Property : uint8_t {
  kWrite,
  kIsWrittenBy,
  kPublish,
  kIsPublishedBy,
  kIsWrittenIn,
  kHasSubject,
  kPublishedAt,
  kLocatedAt,
  kHasPrice,
  kContent,
};
inline constexpr int kNumProperties = 10;

struct PropertyInfo {
  Property property;
  std::string_view name;
  std::optional<Class> domain;  // nullopt: any class
  std::optional<Class> range;   // nullopt: literal
};

const PropertyInfo& Describe(Property property);
std::span<const PropertyInfo> AllProperties();
// (p, q) such that p(a, b) entails q(b, a) and vice versa.
std::span<const std::pair<Property, Property>> InversePairs();

const char* ClassName(Class cls);
const char* PropertyName(Property property);
bool ParseProperty(std::string_view name, Property* property);
bool ParseClass(std::string_view name, Class* cls);

// Namespace prefix used when printing queries, e.g. cs_author for Author.
std::string_view ClassPrefix(Class cls);
bool ParseClassPrefix(std::string_view prefix, Class* cls);

using EntityId = uint32_t;

struct Term {
  enum class Kind : uint8_t { kEntity, kLiteral };
  Kind kind = Kind::kEntity;
  uint32_t id = 0;

  static Term Entity(EntityId id) { return {Kind::kEntity, id}; }
  static Term Literal(uint32_t id) { return {Kind::kLiteral, id}; }
  bool is_literal() const { return kind == Kind::kLiteral; }
  uint64_t Pack() const { return (uint64_t{static_cast<uint8_t>(kind)} << 32) | id; }
  auto operator<=>(const Term&) const = default;
};

struct Triple {
  EntityId subject = 0;
  Property property = Property::kContent;
  Term object;
  auto operator<=>(const Triple&) const = default;
};

class ConsistencyError : public Error {
 public:
  ConsistencyError(Property property, std::string detail)
      : Error(std::string("consistency error on ") + PropertyName(property) + ": " + detail),
        property_(property),
        detail_(std::move(detail)) {}
  Property property() const { return property_; }
  const std::string& detail() const { return detail_; }

 private:
  Property property_;
  std::string detail_;
};

struct Violation {
  enum class Kind { kDomain, kRange, kMissingContent, kMultipleContent };
  Kind kind;
  EntityId entity = 0;
  std::optional<Property> property;
  std::string message;
};

// Typed entities and triples with per-property indexes. A plain value type:
// copy it to take a snapshot.
class Graph {
 public:
  // Entity keyed by (class, FoldCase(content)), with its content literal.
  // Returns the existing entity if the key is already present.
  EntityId AddEntity(Class cls, std::string_view content);
  // Same with an explicit identity key (courses are keyed by record id).
  EntityId AddEntity(Class cls, std::string_view identity, std::string_view content);
  // Creates or finds an entity without touching its content.
  EntityId DeclareEntity(Class cls, std::string_view identity);
  std::optional<EntityId> FindEntity(Class cls, std::string_view identity) const;

  // Schema-checked insertion with set semantics. Returns true if the triple
  // was new. Throws ConsistencyError on a domain or range violation.
  bool Insert(EntityId subject, Property property, EntityId object);
  bool InsertLiteral(EntityId subject, Property property, std::string_view literal);
  bool Insert(const Triple& triple);
  // No schema check; lets tests and repair tools build broken graphs.
  bool InsertUnchecked(const Triple& triple);

  bool Contains(const Triple& triple) const { return triple_set_.count(Key(triple)) > 0; }

  size_t entity_count() const { return entities_.size(); }
  size_t triple_count() const { return triples_.size(); }
  size_t literal_count() const { return literals_.size(); }
  size_t CountClass(Class cls) const;

  Class EntityClass(EntityId id) const { return entities_[id].cls; }
  const std::string& EntityIdentity(EntityId id) const { return entities_[id].identity; }
  // First content literal of an entity, or empty if it has none.
  std::string_view Content(EntityId id) const;
  const std::string& Literal(uint32_t id) const { return literals_[id]; }
  const std::string& FoldedLiteral(uint32_t id) const { return folded_[id]; }
  std::optional<uint32_t> FindLiteral(std::string_view text) const;
  // Literal text or entity content.
  std::string_view TermText(const Term& term) const;

  const std::vector<Triple>& triples() const { return triples_; }
  // Indexes hold positions into triples().
  std::span<const uint32_t> WithProperty(Property property) const;
  std::span<const uint32_t> WithSubject(Property property, EntityId subject) const;
  std::span<const uint32_t> WithObject(Property property, const Term& object) const;

 private:
  struct EntityRecord {
    Class cls;
    std::string identity;
  };
  struct TripleKey {
    uint64_t a;
    uint64_t b;
    bool operator==(const TripleKey&) const = default;
  };
  struct TripleKeyHash {
    size_t operator()(const TripleKey& k) const {
      return std::hash<uint64_t>()(k.a * 0x9E3779B97F4A7C15ULL ^ k.b);
    }
  };

  static TripleKey Key(const Triple& t);
  static std::string EntityKey(Class cls, std::string_view identity);
  uint32_t InternLiteral(std::string_view text);
  void CheckSchema(const Triple& triple) const;

  std::vector<EntityRecord> entities_;
  std::unordered_map<std::string, EntityId> entity_index_;
  std::vector<std::string> literals_;
  std::vector<std::string> folded_;
  std::unordered_map<std::string, uint32_t> literal_index_;

  std::vector<Triple> triples_;
  std::unordered_set<TripleKey, TripleKeyHash> triple_set_;
  std::array<std::vector<uint32_t>, kNumProperties> by_property_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> by_subject_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> by_object_;
};

// Materializes both directions of every inverse pair. Returns the number of
// triples added; a second call adds none.
size_t ApplyInference(Graph& graph);

// Domain/range violations and entities without exactly one content literal.
std::vector<Violation> CheckConsistency(const Graph& graph);

// Id-free description of a graph's triples, e.g.
// "Author:nguyễn văn an|write|Course:c01", for comparing ingests.
std::set<std::string> CanonicalTriples(const Graph& graph);

}  // namespace vocwqa

#endif  // VOCWQA_KB_H_

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

#include "vocwqa/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vocwqa/text.h"

namespace vocwqa {
namespace {

using nlohmann::json;

const std::set<std::string, std::less<>>& KnownFields() {
  static const std::set<std::string, std::less<>> fields = {
      "id",       "name",    "language",     "summary",   "authors",
      "copyright_holders",   "maintainers",  "keywords",  "version",
      "affiliations",        "publisher",    "year",      "subject",
      "place",    "price",
  };
  return fields;
}

std::string GetString(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  if (!it->is_string()) throw Error(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::optional<std::string> GetOptional(const json& obj, const char* key) {
  std::string value = Trim(GetString(obj, key));
  if (value.empty()) return std::nullopt;
  return value;
}

std::vector<std::string> GetList(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  std::vector<std::string> out;
  if (it->is_string()) {
    out.push_back(it->get<std::string>());
  } else if (it->is_array()) {
    for (const auto& v : *it) {
      if (!v.is_string()) throw Error(std::string("field '") + key + "' must hold strings");
      out.push_back(v.get<std::string>());
    }
  } else {
    throw Error(std::string("field '") + key + "' must be a list of strings");
  }
  return out;
}

bool IsYear(std::string_view s) {
  return (s.size() == 3 || s.size() == 4) &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

EntityRef Named(Class cls, const std::string& content) {
  std::string clean = CleanText(content);
  return {cls, FoldCase(clean), clean};
}

}  // namespace

CourseRecord ParseCourseRecord(std::string_view json_line,
                               std::vector<std::string>* unknown_fields) {
  json obj;
  try {
    obj = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw Error("record must be a JSON object");
  CourseRecord r;
  r.id = Trim(GetString(obj, "id"));
  r.name = Trim(GetString(obj, "name"));
  r.language = GetString(obj, "language");
  r.summary = GetString(obj, "summary");
  r.authors = GetList(obj, "authors");
  r.copyright_holders = GetList(obj, "copyright_holders");
  r.maintainers = GetList(obj, "maintainers");
  r.keywords = GetList(obj, "keywords");
  r.version = GetString(obj, "version");
  r.affiliations = GetList(obj, "affiliations");
  r.publisher = GetOptional(obj, "publisher");
  r.year = GetOptional(obj, "year");
  r.subject = GetOptional(obj, "subject");
  r.place = GetOptional(obj, "place");
  r.price = GetOptional(obj, "price");
  if (unknown_fields != nullptr) {
    for (const auto& [key, value] : obj.items()) {
      if (KnownFields().count(key) == 0) unknown_fields->push_back(key);
    }
  }
  return r;
}

std::vector<KeyedTriple> RecordToTriples(const CourseRecord& record) {
  std::string name = CleanText(record.name);
  std::string label = record.id.empty() ? name : record.id;
  if (name.empty()) throw IngestError(label, "course name is empty");
  if (record.year && !IsYear(*record.year)) {
    throw IngestError(label, "year '" + *record.year + "' is not a 3-4 digit number");
  }

  std::vector<KeyedTriple> out;
  EntityRef course{Class::kCourse, FoldCase(label), name};
  out.push_back({course, Property::kContent, name});

  auto add_named = [&](Class cls, const std::string& value) {
    EntityRef entity = Named(cls, value);
    out.push_back({entity, Property::kContent, entity.content});
    return entity;
  };

  for (const std::string& author : record.authors) {
    if (Trim(author).empty()) continue;
    EntityRef a = add_named(Class::kAuthor, author);
    out.push_back({a, Property::kWrite, course});
  }
  std::optional<EntityRef> publisher;
  if (record.publisher) {
    publisher = add_named(Class::kPublisher, *record.publisher);
    out.push_back({*publisher, Property::kPublish, course});
  }
  if (record.year) {
    EntityRef y = add_named(Class::kYear, *record.year);
    out.push_back({course, Property::kIsWrittenIn, y});
  }
  if (record.subject) {
    EntityRef s = add_named(Class::kSubject, *record.subject);
    out.push_back({course, Property::kHasSubject, s});
  }
  if (record.place) {
    EntityRef p = add_named(Class::kPlace, *record.place);
    out.push_back({course, Property::kPublishedAt, p});
    if (publisher) out.push_back({*publisher, Property::kLocatedAt, p});
  }
  if (record.price) {
    EntityRef p = add_named(Class::kPrice, *record.price);
    out.push_back({course, Property::kHasPrice, p});
  }
  return out;
}

void InsertKeyed(Graph& graph, const std::vector<KeyedTriple>& triples) {
  for (const KeyedTriple& t : triples) {
    EntityId subject = graph.DeclareEntity(t.subject.cls, t.subject.identity);
    if (const auto* literal = std::get_if<std::string>(&t.object)) {
      if (t.property == Property::kContent &&
          !graph.WithSubject(Property::kContent, subject).empty()) {
        continue;
      }
      graph.InsertLiteral(subject, t.property, *literal);
      continue;
    }
    const EntityRef& object = std::get<EntityRef>(t.object);
    graph.Insert(subject, t.property, graph.DeclareEntity(object.cls, object.identity));
  }
}

Corpus LoadCorpusText(std::string_view text) {
  Corpus corpus;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string> unknown;
    CourseRecord record;
    try {
      record = ParseCourseRecord(line, &unknown);
      InsertKeyed(corpus.graph, RecordToTriples(record));
    } catch (const Error& e) {
      corpus.report.errors.push_back({line_no, record.id, e.what()});
      continue;
    }
    for (const auto& field : unknown) {
      corpus.report.warnings.push_back({line_no, record.id, "unknown field '" + field + "' ignored"});
    }
    corpus.records.push_back(std::move(record));
  }
  corpus.report.records_loaded = corpus.records.size();
  corpus.report.inferred_triples = ApplyInference(corpus.graph);
  corpus.report.violations = CheckConsistency(corpus.graph);
  return corpus;
}

Corpus LoadCorpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return LoadCorpusText(buffer.str());
}

}  // namespace vocwqa

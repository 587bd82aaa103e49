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

#ifndef VOCWQA_CORPUS_H_
#define VOCWQA_CORPUS_H_

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vocwqa/error.h"
#include "vocwqa/kb.h"

namespace vocwqa {

// One course's metadata as found in the corpus file.
struct CourseRecord {
  std::string id;
  std::string name;
  std::string language;
  std::string summary;
  std::vector<std::string> authors;
  std::vector<std::string> copyright_holders;
  std::vector<std::string> maintainers;
  std::vector<std::string> keywords;
  std::string version;
  std::vector<std::string> affiliations;
  std::optional<std::string> publisher;
  std::optional<std::string> year;
  std::optional<std::string> subject;
  std::optional<std::string> place;
  std::optional<std::string> price;

  bool operator==(const CourseRecord&) const = default;
};

class IngestError : public Error {
 public:
  IngestError(std::string record_id, const std::string& message)
      : Error("record '" + record_id + "': " + message), record_id_(std::move(record_id)) {}
  const std::string& record_id() const { return record_id_; }

 private:
  std::string record_id_;
};

// Entity named by class and identity key rather than by graph id.
struct EntityRef {
  Class cls;
  std::string identity;
  std::string content;
  bool operator==(const EntityRef&) const = default;
};

struct KeyedTriple {
  EntityRef subject;
  Property property;
  std::variant<EntityRef, std::string> object;
  bool operator==(const KeyedTriple&) const = default;
};

// Maps a record to triples: the course with its name, one entity per
// author/publisher/year/subject/place/price (shared across records by
// normalized content) and the relations between them. Throws IngestError
// for an empty name or a year that is not 3-4 digits.
std::vector<KeyedTriple> RecordToTriples(const CourseRecord& record);

// Inserts keyed triples, creating entities on first sight. An entity that
// already has a content literal keeps it.
void InsertKeyed(Graph& graph, const std::vector<KeyedTriple>& triples);

struct RecordIssue {
  size_t line = 0;  // 1-based line in the corpus file
  std::string record_id;
  std::string message;
};

struct LoadReport {
  size_t records_loaded = 0;
  size_t inferred_triples = 0;
  std::vector<RecordIssue> errors;    // records skipped
  std::vector<RecordIssue> warnings;  // e.g. unknown fields
  std::vector<Violation> violations;  // from CheckConsistency

  bool ok() const { return errors.empty() && violations.empty(); }
};

struct Corpus {
  Graph graph;
  std::vector<CourseRecord> records;
  LoadReport report;
};

// Parses one JSON object into a record. Throws Error on malformed input;
// unknown field names are appended to *unknown_fields when non-null.
CourseRecord ParseCourseRecord(std::string_view json_line,
                               std::vector<std::string>* unknown_fields = nullptr);

// JSON Lines corpus: one record per line. Bad records are reported and
// skipped; the rest are loaded, closed under inference and checked.
Corpus LoadCorpusText(std::string_view text);
// Throws Error if the file cannot be read.
Corpus LoadCorpus(const std::filesystem::path& path);

// Holds the current corpus. Readers get a complete immutable snapshot;
// Install swaps in a new one atomically.
class KnowledgeBase {
 public:
  KnowledgeBase() : current_(std::make_shared<const Corpus>()) {}
  explicit KnowledgeBase(Corpus corpus)
      : current_(std::make_shared<const Corpus>(std::move(corpus))) {}

  std::shared_ptr<const Corpus> snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return current_;
  }
  void Install(std::shared_ptr<const Corpus> corpus) {
    std::lock_guard<std::mutex> lock(mu_);
    current_ = std::move(corpus);
  }

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const Corpus> current_;
};

}  // namespace vocwqa

#endif  // VOCWQA_CORPUS_H_

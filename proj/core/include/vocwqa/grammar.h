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

#ifndef VOCWQA_GRAMMAR_H_
#define VOCWQA_GRAMMAR_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vocwqa/error.h"

namespace vocwqa {

// Literal slot kinds a grammar can ask for.
enum class LiteralKind {
  kTitle,
  kPerson,
  kPublisherName,
  kSubjectName,
  kPlaceName,
  kYear,
  kNumber,
};

const char* LiteralKindName(LiteralKind kind);
bool ParseLiteralKind(std::string_view name, LiteralKind* kind);

// One node of a production body.
struct Symbol {
  enum class Kind {
    kCategory,     // lexicon category, e.g. <verb_write>
    kPhrase,       // reference to a sub-phrase production, e.g. <book>
    kLiteral,      // TITLE, PERSON, ...
    kPunct,        // "?", ",", "."
    kOptional,     // [ children ]
    kRepeat,       // { children }
  };

  Kind kind = Kind::kCategory;
  std::string name;  // category, phrase name or punctuation text
  LiteralKind literal = LiteralKind::kTitle;
  std::vector<Symbol> children;

  // Display label used in parse trees.
  std::string Label() const;
  bool operator==(const Symbol&) const = default;
};

using Sequence = std::vector<Symbol>;

// A question rule (one table row) or a sub-phrase.
struct Production {
  std::string name;
  std::vector<Sequence> alternatives;  // rules always have exactly one
  std::string source;                  // the line as written
  int line = 0;
};

// Question rule with its family, e.g. Q1.1a in family 1.
struct GrammarRule {
  std::string id;
  int family = 0;
  Sequence body;
  std::string source;
};

class GrammarError : public Error {
 public:
  GrammarError(int line, const std::string& message)
      : Error("grammar line " + std::to_string(line) + ": " + message) {}
};

// Immutable after construction.
class Grammar {
 public:
  // Reads the EBNF description; every category reference is checked
  // against KnownCategories() and every phrase reference must resolve.
  static Grammar Parse(std::string_view source);
  static const Grammar& Default();

  const std::vector<GrammarRule>& rules() const { return rules_; }
  const GrammarRule* FindRule(std::string_view id) const;
  const Production* FindPhrase(std::string_view name) const;
  const std::map<std::string, Production, std::less<>>& phrases() const {
    return phrases_;
  }

 private:
  std::vector<GrammarRule> rules_;
  std::map<std::string, Production, std::less<>> phrases_;
};

bool IsRuleId(std::string_view name);

}  // namespace vocwqa

#endif  // VOCWQA_GRAMMAR_H_

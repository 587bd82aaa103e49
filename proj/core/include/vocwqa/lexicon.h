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

#ifndef VOCWQA_LEXICON_H_
#define VOCWQA_LEXICON_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vocwqa/error.h"

namespace vocwqa {

// Terminal categories a lexicon line may use.
std::span<const std::string_view> KnownCategories();
bool IsKnownCategory(std::string_view category);

struct LexiconEntry {
  std::string surface;   // NFC, lowercase, single-spaced
  std::string category;

  bool operator==(const LexiconEntry&) const = default;
};

class LexiconError : public Error {
 public:
  LexiconError(int line, const std::string& message)
      : Error("lexicon line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Immutable after construction.
class Lexicon {
 public:
  // Parses the tab-separated lexicon format:
  //   category<TAB>surface
  // Blank lines and lines starting with '#' are skipped.
  static Lexicon Load(std::string_view source);

  // The lexicon compiled into the library.
  static const Lexicon& Default();

  Lexicon() = default;

  // Adds one entry; throws LexiconError (line 0) on a duplicate pair or an
  // unknown category.
  void Add(std::string_view category, std::string_view surface);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Categories of an exact (normalized) surface; empty if unknown.
  std::vector<std::string> CategoriesOf(std::string_view surface) const;

  // Longest entry matching words[start...]. Returns the number of words
  // consumed (0 when nothing matches) and fills the categories of that
  // surface, in lexicon order.
  size_t LongestMatch(std::span<const std::string> words, size_t start,
                      std::vector<std::string>* categories) const;

 private:
  void AddEntry(std::string surface, std::string category, int line);

  std::vector<LexiconEntry> entries_;
  // first word -> surfaces starting with it, each split into words.
  std::map<std::string, std::vector<std::vector<std::string>>, std::less<>>
      by_first_word_;
  std::map<std::string, std::vector<std::string>, std::less<>> categories_;
};

enum class TokenKind {
  kWord,     // lexicon match
  kLiteral,  // unknown word run or quoted span; slot kind resolved by parser
  kYear,     // 3-4 digits
  kNumber,   // other digit runs
  kPunct,
};

struct Span {
  size_t begin = 0;  // byte offsets into Normalize(question)
  size_t end = 0;
  bool operator==(const Span&) const = default;
};

struct Token {
  TokenKind kind = TokenKind::kWord;
  // Lexicon categories for words; for other kinds a single pseudo-category
  // (TITLE, YEAR, NUMBER, PUNCT).
  std::vector<std::string> categories;
  std::string surface;     // original casing, NFC
  std::string normalized;  // NFC lowercase
  Span span;
  bool quoted = false;

  const std::string& category() const { return categories.front(); }
  bool HasCategory(std::string_view category) const;
  bool is_literal() const { return kind == TokenKind::kLiteral; }
};

const char* TokenKindName(TokenKind kind);

// Splits a question into grammar tokens: longest lexicon match left to
// right, quoted spans and unknown word runs as literals, digit runs as
// YEAR/NUMBER, and ? , . ! ; : as punctuation.
std::vector<Token> Segment(std::string_view question, const Lexicon& lexicon);

}  // namespace vocwqa

#endif  // VOCWQA_LEXICON_H_

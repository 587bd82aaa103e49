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

#include "vocwqa/lexicon.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "vocwqa/resources.h"
#include "vocwqa/text.h"

namespace vocwqa {
namespace {

constexpr std::array<std::string_view, 35> kCategories = {
    "what_author",    "what_publisher", "what_time",      "what_subject",
    "what_place",     "what_price",     "how_many",       "vperfect",
    "vpassive",       "interrogative1", "interrogative2", "interrogative3",
    "interrogative4", "verb_write",     "verb_publish",   "verb_be",
    "verb_have",      "verb_locate",    "verb_buy",       "verb_cost",
    "book_type",      "creator",        "author_word",    "publisher_word",
    "subject_word",   "field",          "price",          "year_word",
    "plural",         "conjunction",    "possessive",     "agent_word",
    "prep_time",      "is_of",          "in_elib",
};

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

bool IsAllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

// Raw piece of the cleaned question before lexicon lookup.
struct Piece {
  enum Kind { kWord, kPunct, kQuoted } kind;
  size_t begin;  // byte range in the cleaned (display) text
  size_t end;
  std::string inner;  // text without quotes, for kQuoted
  bool space_before;
};

bool IsPunctChar(char c) {
  return c == '?' || c == ',' || c == '!' || c == ';' || c == ':';
}

// Length of a quote mark at s[i]: ASCII '"' or U+201C/U+201D.
size_t QuoteAt(std::string_view s, size_t i) {
  if (s[i] == '"') return 1;
  if (s.compare(i, 3, "\xE2\x80\x9C") == 0 || s.compare(i, 3, "\xE2\x80\x9D") == 0) {
    return 3;
  }
  return 0;
}

bool IsSentenceDot(std::string_view s, size_t i) {
  if (s[i] != '.') return false;
  size_t next = i + 1;
  return next >= s.size() || s[next] == ' ' || IsPunctChar(s[next]) ||
         QuoteAt(s, next) > 0;
}

std::vector<Piece> SplitPieces(std::string_view display) {
  std::vector<Piece> pieces;
  bool space = false;
  size_t i = 0;
  while (i < display.size()) {
    char c = display[i];
    if (c == ' ') {
      space = true;
      ++i;
      continue;
    }
    if (IsPunctChar(c) || IsSentenceDot(display, i)) {
      pieces.push_back({Piece::kPunct, i, i + 1, {}, space});
      space = false;
      ++i;
      continue;
    }
    if (size_t q = QuoteAt(display, i); q > 0) {
      size_t j = i + q;
      size_t close = std::string_view::npos;
      size_t close_len = 0;
      for (size_t k = j; k < display.size(); ++k) {
        if (size_t ql = QuoteAt(display, k); ql > 0) {
          close = k;
          close_len = ql;
          break;
        }
      }
      size_t inner_end = close == std::string_view::npos ? display.size() : close;
      // An unterminated quote runs to the end, minus a trailing "?".
      if (close == std::string_view::npos && inner_end > j &&
          IsPunctChar(display[inner_end - 1])) {
        --inner_end;
      }
      size_t piece_end = close == std::string_view::npos ? inner_end : close + close_len;
      pieces.push_back({Piece::kQuoted, i, piece_end,
                        Trim(display.substr(j, inner_end - j)), space});
      space = false;
      i = piece_end;
      continue;
    }
    size_t j = i;
    while (j < display.size() && display[j] != ' ' && !IsPunctChar(display[j]) &&
           !IsSentenceDot(display, j) && QuoteAt(display, j) == 0) {
      ++j;
    }
    pieces.push_back({Piece::kWord, i, j, {}, space});
    space = false;
    i = j;
  }
  return pieces;
}

}  // namespace

std::span<const std::string_view> KnownCategories() { return kCategories; }

bool IsKnownCategory(std::string_view category) {
  return std::find(kCategories.begin(), kCategories.end(), category) !=
         kCategories.end();
}

Lexicon Lexicon::Load(std::string_view source) {
  Lexicon lexicon;
  std::istringstream in{std::string(source)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw LexiconError(line_no, "expected 'category<TAB>surface'");
    }
    lexicon.AddEntry(Normalize(line.substr(tab + 1)), Trim(line.substr(0, tab)),
                     line_no);
  }
  return lexicon;
}

const Lexicon& Lexicon::Default() {
  static const Lexicon* lexicon = new Lexicon(Load(resources::kLexicon));
  return *lexicon;
}

void Lexicon::Add(std::string_view category, std::string_view surface) {
  AddEntry(Normalize(surface), std::string(category), 0);
}

void Lexicon::AddEntry(std::string surface, std::string category, int line) {
  if (!IsKnownCategory(category)) {
    throw LexiconError(line, "unknown category '" + category + "'");
  }
  if (surface.empty()) throw LexiconError(line, "empty surface");
  LexiconEntry entry{surface, category};
  if (std::find(entries_.begin(), entries_.end(), entry) != entries_.end()) {
    throw LexiconError(line, "duplicate entry '" + category + "\t" + surface + "'");
  }
  entries_.push_back(entry);
  auto& cats = categories_[surface];
  if (cats.empty()) {
    std::vector<std::string> words = SplitWords(surface);
    auto& bucket = by_first_word_[words.front()];
    bucket.push_back(std::move(words));
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
  }
  cats.push_back(std::move(category));
}

std::vector<std::string> Lexicon::CategoriesOf(std::string_view surface) const {
  auto it = categories_.find(surface);
  if (it == categories_.end()) return {};
  return it->second;
}

size_t Lexicon::LongestMatch(std::span<const std::string> words, size_t start,
                             std::vector<std::string>* categories) const {
  if (start >= words.size()) return 0;
  auto it = by_first_word_.find(words[start]);
  if (it == by_first_word_.end()) return 0;
  // Buckets are sorted longest first, so the first hit is the longest.
  for (const auto& candidate : it->second) {
    if (start + candidate.size() > words.size()) continue;
    if (!std::equal(candidate.begin(), candidate.end(), words.begin() + start)) {
      continue;
    }
    if (categories != nullptr) {
      std::string surface;
      for (const auto& w : candidate) {
        if (!surface.empty()) surface += ' ';
        surface += w;
      }
      *categories = categories_.at(surface);
    }
    return candidate.size();
  }
  return 0;
}

bool Token::HasCategory(std::string_view category) const {
  return std::find(categories.begin(), categories.end(), category) !=
         categories.end();
}

const char* TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "WORD";
    case TokenKind::kLiteral: return "LITERAL";
    case TokenKind::kYear: return "YEAR";
    case TokenKind::kNumber: return "NUMBER";
    case TokenKind::kPunct: return "PUNCT";
  }
  return "?";
}

std::vector<Token> Segment(std::string_view question, const Lexicon& lexicon) {
  const std::string display = CleanText(question);
  const std::vector<Piece> pieces = SplitPieces(display);

  // Lowercased piece text and its span in the normalized question.
  std::vector<std::string> lowered(pieces.size());
  std::vector<Span> spans(pieces.size());
  size_t offset = 0;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].space_before && offset > 0) ++offset;
    lowered[i] = FoldCase(
        std::string_view(display).substr(pieces[i].begin, pieces[i].end - pieces[i].begin));
    spans[i] = {offset, offset + lowered[i].size()};
    offset = spans[i].end;
  }

  std::vector<Token> tokens;
  auto display_range = [&](size_t first, size_t last) {
    return display.substr(pieces[first].begin, pieces[last].end - pieces[first].begin);
  };
  auto normalized_range = [&](size_t first, size_t last) {
    std::string out;
    for (size_t k = first; k <= last; ++k) {
      if (k > first) out += ' ';
      out += lowered[k];
    }
    return out;
  };

  size_t i = 0;
  while (i < pieces.size()) {
    const Piece& piece = pieces[i];
    if (piece.kind == Piece::kPunct) {
      tokens.push_back({TokenKind::kPunct, {"PUNCT"}, display_range(i, i),
                        lowered[i], spans[i], false});
      ++i;
      continue;
    }
    if (piece.kind == Piece::kQuoted) {
      tokens.push_back({TokenKind::kLiteral, {"TITLE"}, piece.inner,
                        FoldCase(piece.inner), spans[i], true});
      ++i;
      continue;
    }
    // A run of consecutive words.
    size_t run_end = i;
    while (run_end < pieces.size() && pieces[run_end].kind == Piece::kWord) ++run_end;
    std::vector<std::string> words(lowered.begin() + i, lowered.begin() + run_end);
    size_t w = 0;
    size_t pending = std::string::npos;  // start of an unknown-word run
    auto flush = [&](size_t stop) {
      if (pending == std::string::npos) return;
      size_t first = i + pending;
      size_t last = i + stop - 1;
      tokens.push_back({TokenKind::kLiteral, {"TITLE"}, display_range(first, last),
                        normalized_range(first, last),
                        {spans[first].begin, spans[last].end}, false});
      pending = std::string::npos;
    };
    while (w < words.size()) {
      std::vector<std::string> categories;
      size_t n = lexicon.LongestMatch(words, w, &categories);
      if (n > 0) {
        flush(w);
        size_t first = i + w;
        size_t last = first + n - 1;
        tokens.push_back({TokenKind::kWord, std::move(categories),
                          display_range(first, last), normalized_range(first, last),
                          {spans[first].begin, spans[last].end}, false});
        w += n;
        continue;
      }
      if (IsAllDigits(words[w])) {
        flush(w);
        size_t p = i + w;
        bool year = words[w].size() == 3 || words[w].size() == 4;
        tokens.push_back({year ? TokenKind::kYear : TokenKind::kNumber,
                          {year ? "YEAR" : "NUMBER"}, display_range(p, p), lowered[p],
                          spans[p], false});
        ++w;
        continue;
      }
      if (pending == std::string::npos) pending = w;
      ++w;
    }
    flush(words.size());
    i = run_end;
  }
  return tokens;
}

}  // namespace vocwqa

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

#include "vocwqa/grammar.h"

#include <cctype>
#include <regex>
#include <set>
#include <sstream>

#include "vocwqa/lexicon.h"
#include "vocwqa/resources.h"
#include "vocwqa/text.h"

namespace vocwqa {
namespace {

constexpr std::pair<LiteralKind, std::string_view> kLiteralNames[] = {
    {LiteralKind::kTitle, "TITLE"},
    {LiteralKind::kPerson, "PERSON"},
    {LiteralKind::kPublisherName, "PUBLISHER_NAME"},
    {LiteralKind::kSubjectName, "SUBJECT_NAME"},
    {LiteralKind::kPlaceName, "PLACE_NAME"},
    {LiteralKind::kYear, "YEAR"},
    {LiteralKind::kNumber, "NUMBER"},
};

// Splits a production body into lexical items.
class BodyLexer {
 public:
  BodyLexer(std::string_view text, int line) : text_(text), line_(line) {}

  // Returns false at end of input.
  bool Next(std::string* item) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    if (c == '<') {
      size_t close = text_.find('>', pos_);
      if (close == std::string_view::npos) throw GrammarError(line_, "unterminated '<'");
      *item = std::string(text_.substr(pos_, close - pos_ + 1));
      pos_ = close + 1;
      return true;
    }
    if (c == '"') {
      size_t close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) throw GrammarError(line_, "unterminated quote");
      *item = std::string(text_.substr(pos_, close - pos_ + 1));
      pos_ = close + 1;
      return true;
    }
    // Typographic quotes as they appear in printed grammars.
    if (text_.compare(pos_, 3, "\xE2\x80\x9C") == 0) {
      size_t close = text_.find("\xE2\x80\x9D", pos_ + 3);
      if (close == std::string_view::npos) throw GrammarError(line_, "unterminated quote");
      *item = "\"" + std::string(text_.substr(pos_ + 3, close - pos_ - 3)) + "\"";
      pos_ = close + 3;
      return true;
    }
    if (std::string_view("[]{}|?,.").find(c) != std::string_view::npos) {
      *item = std::string(1, c);
      ++pos_;
      return true;
    }
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      throw GrammarError(line_, std::string("unexpected character '") + c + "'");
    }
    *item = std::string(text_.substr(start, pos_ - start));
    return true;
  }

 private:
  std::string_view text_;
  int line_;
  size_t pos_ = 0;
};

class BodyParser {
 public:
  BodyParser(std::string_view text, int line) : line_(line) {
    BodyLexer lexer(text, line);
    std::string item;
    while (lexer.Next(&item)) items_.push_back(item);
  }

  std::vector<Sequence> ParseAlternatives() {
    std::vector<Sequence> alternatives;
    alternatives.push_back(ParseSequence());
    while (pos_ < items_.size() && items_[pos_] == "|") {
      ++pos_;
      alternatives.push_back(ParseSequence());
    }
    if (pos_ != items_.size()) {
      throw GrammarError(line_, "unexpected '" + items_[pos_] + "'");
    }
    return alternatives;
  }

 private:
  Sequence ParseSequence() {
    Sequence seq;
    while (pos_ < items_.size()) {
      const std::string& item = items_[pos_];
      if (item == "|" || item == "]" || item == "}") break;
      ++pos_;
      if (item == "[" || item == "{") {
        Symbol group;
        group.kind = item == "[" ? Symbol::Kind::kOptional : Symbol::Kind::kRepeat;
        group.children = ParseSequence();
        const char* close = item == "[" ? "]" : "}";
        if (pos_ >= items_.size() || items_[pos_] != close) {
          throw GrammarError(line_, std::string("missing '") + close + "'");
        }
        ++pos_;
        if (group.children.empty()) throw GrammarError(line_, "empty group");
        seq.push_back(std::move(group));
        continue;
      }
      seq.push_back(ParseAtom(item));
    }
    if (seq.empty()) throw GrammarError(line_, "empty sequence");
    return seq;
  }

  Symbol ParseAtom(const std::string& item) {
    Symbol s;
    if (item.front() == '"') {
      s.kind = Symbol::Kind::kPunct;
      s.name = item.substr(1, item.size() - 2);
      return s;
    }
    if (item == "?" || item == "," || item == ".") {
      s.kind = Symbol::Kind::kPunct;
      s.name = item;
      return s;
    }
    std::string name = item.front() == '<' ? item.substr(1, item.size() - 2) : item;
    if (ParseLiteralKind(name, &s.literal)) {
      s.kind = Symbol::Kind::kLiteral;
      s.name = name;
      return s;
    }
    // Category or phrase; resolved once all productions are known.
    s.kind = Symbol::Kind::kCategory;
    s.name = name;
    return s;
  }

  int line_;
  std::vector<std::string> items_;
  size_t pos_ = 0;
};

void Resolve(Sequence& seq, const std::map<std::string, Production, std::less<>>& phrases,
             int line, std::set<std::string>* used) {
  for (Symbol& s : seq) {
    if (s.kind == Symbol::Kind::kOptional || s.kind == Symbol::Kind::kRepeat) {
      Resolve(s.children, phrases, line, used);
      continue;
    }
    if (s.kind != Symbol::Kind::kCategory) continue;
    if (phrases.count(s.name) > 0) {
      s.kind = Symbol::Kind::kPhrase;
      used->insert(s.name);
    } else if (!IsKnownCategory(s.name)) {
      throw GrammarError(line, "unknown symbol '" + s.name + "'");
    }
  }
}

}  // namespace

const char* LiteralKindName(LiteralKind kind) {
  for (const auto& [k, name] : kLiteralNames) {
    if (k == kind) return name.data();
  }
  return "?";
}

bool ParseLiteralKind(std::string_view name, LiteralKind* kind) {
  for (const auto& [k, n] : kLiteralNames) {
    if (n == name) {
      *kind = k;
      return true;
    }
  }
  return false;
}

std::string Symbol::Label() const {
  switch (kind) {
    case Kind::kPunct: return "\"" + name + "\"";
    case Kind::kOptional: return "[...]";
    case Kind::kRepeat: return "{...}";
    default: return name;
  }
}

bool IsRuleId(std::string_view name) {
  static const std::regex kRuleId(R"(Q[0-9]+\.[0-9]+[a-z]?)");
  return std::regex_match(name.begin(), name.end(), kRuleId);
}

Grammar Grammar::Parse(std::string_view source) {
  Grammar grammar;
  std::vector<Production> rules;
  std::istringstream in{std::string(source)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    size_t eq = trimmed.find('=');
    if (eq == std::string::npos) throw GrammarError(line_no, "missing '='");
    size_t name_end = eq;
    if (eq >= 2 && trimmed.compare(eq - 2, 2, "::") == 0) name_end = eq - 2;
    std::string name = Trim(trimmed.substr(0, name_end));
    if (!name.empty() && name.front() == '<' && name.back() == '>') {
      name = name.substr(1, name.size() - 2);
    }
    if (name.empty()) throw GrammarError(line_no, "missing production name");
    Production production;
    production.name = name;
    production.source = trimmed;
    production.line = line_no;
    production.alternatives = BodyParser(trimmed.substr(eq + 1), line_no).ParseAlternatives();
    if (IsRuleId(name)) {
      if (production.alternatives.size() != 1) {
        throw GrammarError(line_no, "rule " + name + " may not use '|'");
      }
      for (const auto& r : rules) {
        if (r.name == name) throw GrammarError(line_no, "duplicate rule " + name);
      }
      rules.push_back(std::move(production));
    } else {
      if (IsKnownCategory(name)) {
        throw GrammarError(line_no, "'" + name + "' is a lexicon category");
      }
      if (!grammar.phrases_.emplace(name, std::move(production)).second) {
        throw GrammarError(line_no, "duplicate phrase " + name);
      }
    }
  }

  std::set<std::string> used;
  for (auto& [name, phrase] : grammar.phrases_) {
    for (auto& alt : phrase.alternatives) Resolve(alt, grammar.phrases_, phrase.line, &used);
  }
  for (auto& r : rules) {
    Resolve(r.alternatives.front(), grammar.phrases_, r.line, &used);
    GrammarRule rule;
    rule.id = r.name;
    rule.family = std::stoi(r.name.substr(1, r.name.find('.') - 1));
    rule.body = std::move(r.alternatives.front());
    rule.source = r.source;
    grammar.rules_.push_back(std::move(rule));
  }
  return grammar;
}

const Grammar& Grammar::Default() {
  static const Grammar* grammar = new Grammar(Parse(resources::kGrammar));
  return *grammar;
}

const GrammarRule* Grammar::FindRule(std::string_view id) const {
  for (const auto& rule : rules_) {
    if (rule.id == id) return &rule;
  }
  return nullptr;
}

const Production* Grammar::FindPhrase(std::string_view name) const {
  auto it = phrases_.find(name);
  return it == phrases_.end() ? nullptr : &it->second;
}

}  // namespace vocwqa

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

#include "vocwqa/query.h"

#include <algorithm>
#include <cctype>
#include <set>

namespace vocwqa {

bool GroupPattern::operator==(const GroupPattern& other) const {
  return elements == other.elements;
}

bool Union::operator==(const Union& other) const {
  auto eq = [](const std::shared_ptr<GroupPattern>& a, const std::shared_ptr<GroupPattern>& b) {
    if (!a || !b) return a == b;
    return *a == *b;
  };
  return eq(left, other.left) && eq(right, other.right);
}

bool SubSelect::operator==(const SubSelect& other) const {
  if (!select || !other.select) return select == other.select;
  return *select == *other.select;
}

namespace {

// ---------------------------------------------------------------- validation

// Variables a group binds through patterns, unions and subselects.
void CollectBound(const GroupPattern& group, std::set<std::string>* vars) {
  for (const Element& e : group.elements) {
    if (const auto* t = std::get_if<TriplePattern>(&e)) {
      vars->insert(t->subject);
      vars->insert(t->object);
    } else if (const auto* u = std::get_if<Union>(&e)) {
      CollectBound(*u->left, vars);
      CollectBound(*u->right, vars);
    } else if (const auto* s = std::get_if<SubSelect>(&e)) {
      vars->insert(s->select->projection.var);
    }
  }
}

void ValidateSelect(const Select& query, bool nested);

void ValidateGroup(const GroupPattern& group) {
  std::set<std::string> bound_so_far;
  std::set<std::string> all;
  CollectBound(group, &all);
  for (const Element& e : group.elements) {
    if (const auto* t = std::get_if<TriplePattern>(&e)) {
      if (t->subject.empty() || t->object.empty()) throw QueryError("empty variable name");
      bound_so_far.insert(t->subject);
      bound_so_far.insert(t->object);
    } else if (const auto* f = std::get_if<Filter>(&e)) {
      if (bound_so_far.count(f->var) == 0) {
        throw QueryError("FILTER on ?" + f->var + " before any pattern binds it");
      }
    } else if (const auto* u = std::get_if<Union>(&e)) {
      if (!u->left || !u->right) throw QueryError("UNION without both branches");
      ValidateGroup(*u->left);
      ValidateGroup(*u->right);
    } else if (const auto* s = std::get_if<SubSelect>(&e)) {
      if (!s->select) throw QueryError("empty subquery");
      ValidateSelect(*s->select, true);
      std::set<std::string> outer;
      for (const Element& other : group.elements) {
        if (&other == &e) continue;
        GroupPattern single;
        single.elements.push_back(other);
        CollectBound(single, &outer);
      }
      if (outer.count(s->select->projection.var) == 0) {
        throw QueryError("subquery variable ?" + s->select->projection.var +
                         " does not occur in the enclosing group");
      }
    }
  }
}

void ValidateSelect(const Select& query, bool nested) {
  if (nested && query.projection.is_count()) throw QueryError("subquery must project a variable");
  ValidateGroup(query.where);
  std::set<std::string> vars;
  CollectBound(query.where, &vars);
  if (vars.count(query.projection.var) == 0) {
    throw QueryError("projection variable ?" + query.projection.var + " is not bound");
  }
}

// ------------------------------------------------------------- serializing

std::string Quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string FilterText(const Filter& f) {
  std::string out = "FILTER regex(?" + f.var + " , " + Quote(f.pattern);
  if (!f.flags.empty()) out += ", " + Quote(f.flags);
  return out + ")";
}

std::string PatternText(const TriplePattern& t) {
  return "?" + t.subject + " " + std::string(ClassPrefix(t.subject_class)) + ":" +
         PropertyName(t.property) + " ?" + t.object;
}

class Printer {
 public:
  void Select(const vocwqa::Select& q, int level) {
    if (q.projection.is_count()) {
      Line(level, "SELECT (COUNT(DISTINCT ?" + q.projection.var + ") AS ?count)");
    } else {
      Line(level, std::string(q.distinct ? "SELECT DISTINCT ?" : "SELECT ?") + q.projection.var);
    }
    Line(level, "FROM <" + q.dataset + ">");
    Line(level, "WHERE {");
    Group(q.where, level + 1);
    Line(level, "}");
  }

  std::string text() const {
    std::string out;
    for (const auto& l : lines_) out += l + "\n";
    return out;
  }

 private:
  void Line(int level, const std::string& text) {
    lines_.push_back(std::string(4 * level, ' ') + text);
  }

  void Group(const GroupPattern& g, int level) {
    const auto& els = g.elements;
    for (size_t i = 0; i < els.size(); ++i) {
      const Element& e = els[i];
      if (const auto* t = std::get_if<TriplePattern>(&e)) {
        const Filter* f = i + 1 < els.size() ? std::get_if<Filter>(&els[i + 1]) : nullptr;
        if (f != nullptr && f->var == t->object) {
          Line(level, "{" + PatternText(*t));
          Line(level, FilterText(*f) + ".");
          Line(level, "}");
          ++i;
        } else {
          Line(level, "{" + PatternText(*t) + "}");
        }
      } else if (const auto* f = std::get_if<Filter>(&e)) {
        Line(level, FilterText(*f));
      } else if (const auto* u = std::get_if<Union>(&e)) {
        Line(level, "{");
        Group(*u->left, level + 1);
        Line(level, "}");
        Line(level, "UNION");
        Line(level, "{");
        Group(*u->right, level + 1);
        Line(level, "}");
      } else if (const auto* s = std::get_if<SubSelect>(&e)) {
        Line(level, "{");
        Select(*s->select, level);
        Line(level, "}");
      }
      if (i + 1 < els.size()) lines_.back() += ".";
    }
  }

  std::vector<std::string> lines_;
};

// ----------------------------------------------------------------- reading

enum class Tok { kWord, kVar, kIri, kString, kPunct, kEnd };

struct Lexeme {
  Tok kind;
  std::string text;
  size_t offset;
};

std::vector<Lexeme> Lex(std::string_view s) {
  std::vector<Lexeme> out;
  size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw QueryError("query text offset " + std::to_string(i) + ": " + msg);
  };
  auto word_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
           (static_cast<unsigned char>(c) & 0x80);
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '?') {
      size_t start = i++;
      while (i < s.size() && word_char(s[i]) && s[i] != ':') ++i;
      if (i == start + 1) fail("empty variable name");
      out.push_back({Tok::kVar, std::string(s.substr(start + 1, i - start - 1)), start});
    } else if (c == '<') {
      size_t end = s.find('>', i);
      if (end == std::string_view::npos) fail("unterminated IRI");
      out.push_back({Tok::kIri, std::string(s.substr(i + 1, end - i - 1)), i});
      i = end + 1;
    } else if (c == '"') {
      size_t start = i++;
      std::string value;
      while (true) {
        if (i >= s.size()) fail("unterminated string");
        char d = s[i++];
        if (d == '"') break;
        if (d == '\\') {
          if (i >= s.size()) fail("unterminated escape");
          char e = s[i++];
          if (e == 'n') value += '\n';
          else if (e == '\\' || e == '"') value += e;
          else fail("unknown escape");
        } else {
          value += d;
        }
      }
      out.push_back({Tok::kString, value, start});
    } else if (std::string_view("{}().,").find(c) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), i++});
    } else if (word_char(c)) {
      size_t start = i;
      while (i < s.size() && word_char(s[i])) ++i;
      out.push_back({Tok::kWord, std::string(s.substr(start, i - start)), start});
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : toks_(Lex(text)) {}

  vocwqa::Select Query() {
    vocwqa::Select q = SelectBody();
    if (Peek().kind != Tok::kEnd) Fail("trailing text");
    return q;
  }

 private:
  const Lexeme& Peek(size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  [[noreturn]] void Fail(const std::string& msg) const {
    throw QueryError("query text offset " + std::to_string(Peek().offset) + ": " + msg);
  }
  bool IsPunct(char c, size_t ahead = 0) const {
    return Peek(ahead).kind == Tok::kPunct && Peek(ahead).text[0] == c;
  }
  bool IsWord(std::string_view w, size_t ahead = 0) const {
    return Peek(ahead).kind == Tok::kWord && Peek(ahead).text == w;
  }
  void ExpectPunct(char c) {
    if (!IsPunct(c)) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void ExpectWord(std::string_view w) {
    if (!IsWord(w)) Fail("expected " + std::string(w));
    ++pos_;
  }
  std::string Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) Fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  vocwqa::Select SelectBody() {
    vocwqa::Select q;
    ExpectWord("SELECT");
    if (IsPunct('(')) {
      ++pos_;
      ExpectWord("COUNT");
      ExpectPunct('(');
      ExpectWord("DISTINCT");
      q.projection = Projection::CountDistinct(Expect(Tok::kVar, "variable"));
      ExpectPunct(')');
      ExpectWord("AS");
      Expect(Tok::kVar, "variable");
      ExpectPunct(')');
    } else {
      q.distinct = IsWord("DISTINCT");
      if (q.distinct) ++pos_;
      q.projection = Projection::Var(Expect(Tok::kVar, "variable"));
    }
    ExpectWord("FROM");
    q.dataset = Expect(Tok::kIri, "dataset IRI");
    ExpectWord("WHERE");
    q.where = Group();
    return q;
  }

  // '{' elements '}'
  GroupPattern Group() {
    ExpectPunct('{');
    GroupPattern g = Elements();
    ExpectPunct('}');
    return g;
  }

  GroupPattern Elements() {
    GroupPattern g;
    if (IsPunct('}')) return g;
    while (true) {
      ElementInto(&g);
      if (!IsPunct('.')) break;
      ++pos_;
    }
    return g;
  }

  Filter FilterClause() {
    ExpectWord("FILTER");
    ExpectWord("regex");
    ExpectPunct('(');
    Filter f;
    f.var = Expect(Tok::kVar, "variable");
    ExpectPunct(',');
    f.pattern = Expect(Tok::kString, "pattern string");
    if (IsPunct(',')) {
      ++pos_;
      f.flags = Expect(Tok::kString, "flags string");
    }
    ExpectPunct(')');
    return f;
  }

  void ElementInto(GroupPattern* g) {
    if (IsWord("FILTER")) {
      g->elements.push_back(FilterClause());
      return;
    }
    ExpectPunct('{');
    if (IsWord("SELECT")) {
      g->elements.push_back(SubSelect(SelectBody()));
      ExpectPunct('}');
      return;
    }
    if (Peek().kind == Tok::kVar) {
      TriplePattern t;
      t.subject = Expect(Tok::kVar, "variable");
      std::string predicate = Expect(Tok::kWord, "prefix:property");
      size_t colon = predicate.find(':');
      if (colon == std::string::npos ||
          !ParseClassPrefix(std::string_view(predicate).substr(0, colon), &t.subject_class) ||
          !ParseProperty(std::string_view(predicate).substr(colon + 1), &t.property)) {
        Fail("unknown predicate " + predicate);
      }
      t.object = Expect(Tok::kVar, "variable");
      g->elements.push_back(t);
      if (IsWord("FILTER")) {
        g->elements.push_back(FilterClause());
        ExpectPunct('.');
      }
      ExpectPunct('}');
      return;
    }
    // '{' group '}' UNION '{' group '}'; the opening brace is consumed.
    GroupPattern left = Elements();
    ExpectPunct('}');
    ExpectWord("UNION");
    GroupPattern right = Group();
    g->elements.push_back(Union(std::move(left), std::move(right)));
  }

  std::vector<Lexeme> toks_;
  size_t pos_ = 0;
};

}  // namespace

void Validate(const Select& query) { ValidateSelect(query, false); }

int Depth(const Select& query) {
  int deepest = 0;
  std::vector<const GroupPattern*> stack = {&query.where};
  while (!stack.empty()) {
    const GroupPattern* g = stack.back();
    stack.pop_back();
    for (const Element& e : g->elements) {
      if (const auto* u = std::get_if<Union>(&e)) {
        stack.push_back(u->left.get());
        stack.push_back(u->right.get());
      } else if (const auto* s = std::get_if<SubSelect>(&e)) {
        deepest = std::max(deepest, Depth(*s->select));
      }
    }
  }
  return deepest + 1;
}

std::string Serialize(const Select& query) {
  Printer p;
  p.Select(query, 0);
  return p.text();
}

Select ReadQuery(std::string_view text) { return Reader(text).Query(); }

}  // namespace vocwqa

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

#include "vocwqa/engine.h"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_set>

#include "vocwqa/text.h"

namespace vocwqa {
namespace {

constexpr uint64_t kUnbound = ~uint64_t{0};

Term Unpack(uint64_t packed) {
  return {static_cast<Term::Kind>(packed >> 32), static_cast<uint32_t>(packed)};
}

// Solutions over a fixed variable list; kUnbound marks a free slot.
struct Table {
  std::vector<std::string> vars;
  std::vector<std::vector<uint64_t>> rows;

  int IndexOf(const std::string& var) const {
    auto it = std::find(vars.begin(), vars.end(), var);
    return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
  }
};

void CollectVars(const GroupPattern& g, std::vector<std::string>* vars) {
  auto add = [&](const std::string& v) {
    if (std::find(vars->begin(), vars->end(), v) == vars->end()) vars->push_back(v);
  };
  for (const Element& e : g.elements) {
    if (const auto* t = std::get_if<TriplePattern>(&e)) {
      add(t->subject);
      add(t->object);
    } else if (const auto* f = std::get_if<Filter>(&e)) {
      add(f->var);
    } else if (const auto* u = std::get_if<Union>(&e)) {
      CollectVars(*u->left, vars);
      CollectVars(*u->right, vars);
    } else if (const auto* s = std::get_if<SubSelect>(&e)) {
      add(s->select->projection.var);
    }
  }
}

class Evaluator {
 public:
  explicit Evaluator(const Graph& graph) : graph_(graph) {}

  ResultSet Run(const Select& query) {
    std::vector<std::string> vars;
    CollectVars(query.where, &vars);
    if (std::find(vars.begin(), vars.end(), query.projection.var) == vars.end()) {
      throw UnboundProjection("?" + query.projection.var + " does not occur in the query");
    }
    std::vector<uint64_t> terms = Project(query);
    if (query.projection.is_count()) return ResultSet::Count(terms.size());
    std::vector<std::string> values;
    values.reserve(terms.size());
    for (uint64_t t : terms) values.emplace_back(graph_.TermText(Unpack(t)));
    return ResultSet::Rows(std::move(values));
  }

 private:
  // Distinct terms bound to the projection variable.
  std::vector<uint64_t> Project(const Select& query) {
    Table t = Group(query.where);
    int col = t.IndexOf(query.projection.var);
    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> out;
    for (const auto& row : t.rows) {
      uint64_t v = row[col];
      if (v != kUnbound && seen.insert(v).second) out.push_back(v);
    }
    return out;
  }

  // Group semantics do not depend on element order, so evaluation is
  // planned: unions and sub-selects first (each joins into a single seed
  // row), then triple patterns greedily by connectivity and filters as soon
  // as a triple pattern has bound their variable.
  Table Group(const GroupPattern& g) {
    Table t;
    CollectVars(g, &t.vars);
    t.rows.push_back(std::vector<uint64_t>(t.vars.size(), kUnbound));
    std::vector<const TriplePattern*> triples;
    std::vector<const Filter*> filters;
    for (const Element& e : g.elements) {
      if (const auto* p = std::get_if<TriplePattern>(&e)) {
        triples.push_back(p);
      } else if (const auto* f = std::get_if<Filter>(&e)) {
        filters.push_back(f);
      } else if (const auto* u = std::get_if<Union>(&e)) {
        Table left = Group(*u->left);
        Table right = Group(*u->right);
        Table both;
        both.vars = t.vars;
        Append(left, &both);
        Append(right, &both);
        Join(both, &t);
      } else if (const auto* s = std::get_if<SubSelect>(&e)) {
        Table sub;
        sub.vars = t.vars;
        int col = t.IndexOf(s->select->projection.var);
        for (uint64_t v : Project(*s->select)) {
          std::vector<uint64_t> row(t.vars.size(), kUnbound);
          row[col] = v;
          sub.rows.push_back(std::move(row));
        }
        Join(sub, &t);
      }
      if (t.rows.empty()) return t;
    }
    // Variables bound in every row: those bound by a triple pattern.
    std::set<std::string> bound;
    auto flush_filters = [&] {
      std::erase_if(filters, [&](const Filter* f) {
        if (!bound.count(f->var)) return false;
        ApplyFilter(*f, &t);
        return true;
      });
    };
    while (!triples.empty() && !t.rows.empty()) {
      size_t best = 0;
      int best_score = -1;
      for (size_t i = 0; i < triples.size(); ++i) {
        const TriplePattern& p = *triples[i];
        int score = 0;
        if (bound.count(p.subject) || bound.count(p.object)) score += 2;
        for (const Filter* f : filters) {
          if (f->var == p.subject || f->var == p.object) score += 1;
        }
        if (score > best_score) {
          best = i;
          best_score = score;
        }
      }
      Match(*triples[best], &t);
      bound.insert(triples[best]->subject);
      bound.insert(triples[best]->object);
      triples.erase(triples.begin() + best);
      flush_filters();
    }
    for (const Filter* f : filters) ApplyFilter(*f, &t);
    return t;
  }

  // Copies rows of src into dst's variable space.
  static void Append(const Table& src, Table* dst) {
    std::vector<int> map;
    for (const auto& v : src.vars) map.push_back(dst->IndexOf(v));
    for (const auto& row : src.rows) {
      std::vector<uint64_t> out(dst->vars.size(), kUnbound);
      for (size_t i = 0; i < row.size(); ++i) out[map[i]] = row[i];
      dst->rows.push_back(std::move(out));
    }
  }

  // Natural join of t with other (same variable space).
  static void Join(const Table& other, Table* t) {
    std::vector<std::vector<uint64_t>> out;
    for (const auto& a : t->rows) {
      for (const auto& b : other.rows) {
        std::vector<uint64_t> merged = a;
        bool ok = true;
        for (size_t i = 0; i < b.size() && ok; ++i) {
          if (b[i] == kUnbound) continue;
          if (merged[i] == kUnbound) merged[i] = b[i];
          else ok = merged[i] == b[i];
        }
        if (ok) out.push_back(std::move(merged));
      }
    }
    t->rows = std::move(out);
  }

  bool SubjectOk(EntityId s, const TriplePattern& p) const {
    return s < graph_.entity_count() && graph_.EntityClass(s) == p.subject_class;
  }

  void Match(const TriplePattern& p, Table* t) {
    int si = t->IndexOf(p.subject);
    int oi = t->IndexOf(p.object);
    const auto& triples = graph_.triples();
    std::vector<std::vector<uint64_t>> out;
    for (const auto& row : t->rows) {
      uint64_t s = row[si];
      uint64_t o = row[oi];
      auto emit = [&](const Triple& tr) {
        if (!SubjectOk(tr.subject, p)) return;
        uint64_t sv = Term::Entity(tr.subject).Pack();
        uint64_t ov = tr.object.Pack();
        if (si == oi && sv != ov) return;
        std::vector<uint64_t> next = row;
        next[si] = sv;
        next[oi] = ov;
        out.push_back(std::move(next));
      };
      if (s != kUnbound) {
        Term st = Unpack(s);
        if (st.is_literal()) continue;
        if (o != kUnbound) {
          Triple tr{st.id, p.property, Unpack(o)};
          if (graph_.Contains(tr)) emit(tr);
          continue;
        }
        for (uint32_t i : graph_.WithSubject(p.property, st.id)) emit(triples[i]);
      } else if (o != kUnbound) {
        for (uint32_t i : graph_.WithObject(p.property, Unpack(o))) emit(triples[i]);
      } else {
        for (uint32_t i : graph_.WithProperty(p.property)) emit(triples[i]);
      }
    }
    t->rows = std::move(out);
  }

  void ApplyFilter(const Filter& f, Table* t) {
    LiteralPattern pattern(f.pattern, f.flags);
    bool fold = f.flags.find('i') != std::string::npos;
    int col = t->IndexOf(f.var);
    std::erase_if(t->rows, [&](const std::vector<uint64_t>& row) {
      if (row[col] == kUnbound) return true;
      Term term = Unpack(row[col]);
      if (!term.is_literal()) return true;
      return fold ? !pattern.MatchesFolded(graph_.FoldedLiteral(term.id))
                  : !pattern.Matches(graph_.Literal(term.id));
    });
  }

  const Graph& graph_;
};

}  // namespace

ResultSet ResultSet::Rows(std::vector<std::string> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return {Kind::kRows, std::move(values), 0};
}

std::string RenderResult(const ResultSet& result) {
  if (result.is_count()) return "count=" + std::to_string(result.count);
  std::string out = "[";
  for (size_t i = 0; i < result.rows.size(); ++i) {
    if (i > 0) out += ", ";
    out += "\"" + result.rows[i] + "\"";
  }
  return out + "]";
}

LiteralPattern::LiteralPattern(std::string_view pattern, std::string_view flags) {
  for (char f : flags) {
    if (f != 'i') throw QueryError(std::string("unsupported regex flag '") + f + "'");
  }
  fold_ = !flags.empty();
  size_t i = 0;
  size_t end = pattern.size();
  if (i < end && pattern[i] == '^') {
    anchored_start_ = true;
    ++i;
  }
  // A trailing '$' anchors unless it is escaped by an odd run of backslashes.
  if (end > i && pattern[end - 1] == '$') {
    size_t slashes = 0;
    while (end - 1 - slashes > i && pattern[end - 2 - slashes] == '\\') ++slashes;
    if (slashes % 2 == 0) {
      anchored_end_ = true;
      --end;
    }
  }
  static constexpr std::string_view kMeta = "\\^$.|?*+()[]{}";
  std::string literal;
  for (; i < end; ++i) {
    char c = pattern[i];
    if (c == '\\') {
      if (i + 1 >= end) throw QueryError("dangling escape in pattern");
      char next = pattern[++i];
      if (kMeta.find(next) == std::string_view::npos) {
        throw QueryError(std::string("unsupported escape \\") + next + " in pattern");
      }
      literal += next;
    } else if (kMeta.find(c) != std::string_view::npos) {
      throw QueryError(std::string("unsupported regex operator '") + c + "' in pattern");
    } else {
      literal += c;
    }
  }
  needle_ = fold_ ? FoldCase(literal) : ToNfc(literal);
}

bool LiteralPattern::Matches(std::string_view text) const {
  return MatchesFolded(fold_ ? FoldCase(text) : std::string(text));
}

bool LiteralPattern::MatchesFolded(std::string_view s) const {
  if (anchored_start_ && anchored_end_) return s == needle_;
  if (anchored_start_) return s.starts_with(needle_);
  if (anchored_end_) return s.ends_with(needle_);
  return s.find(needle_) != std::string_view::npos;
}

ResultSet Evaluate(const Select& query, const Graph& graph) {
  return Evaluator(graph).Run(query);
}

}  // namespace vocwqa

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

#include "vocwqa/oracle.h"

#include <unicode/regex.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <tuple>

namespace vocwqa {
namespace {

using Solution = std::map<std::string, Term>;

class IcuFilter {
 public:
  explicit IcuFilter(const Filter& f) {
    uint32_t flags = 0;
    for (char c : f.flags) {
      if (c == 'i') flags |= UREGEX_CASE_INSENSITIVE;
      else throw QueryError(std::string("unsupported regex flag '") + c + "'");
    }
    UErrorCode status = U_ZERO_ERROR;
    matcher_.reset(new icu::RegexMatcher(icu::UnicodeString::fromUTF8(f.pattern), flags, status));
    if (U_FAILURE(status)) throw QueryError("invalid regex " + f.pattern);
  }

  bool Matches(std::string_view text) {
    icu::UnicodeString s = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), text.size()));
    matcher_->reset(s);
    UErrorCode status = U_ZERO_ERROR;
    bool found = matcher_->find(0, status);
    return U_SUCCESS(status) && found;
  }

 private:
  std::unique_ptr<icu::RegexMatcher> matcher_;
};

class Oracle {
 public:
  explicit Oracle(const Graph& graph) : graph_(graph) {
    if (graph.triple_count() > kOracleMaxTriples) {
      throw GuardExceeded("graph has " + std::to_string(graph.triple_count()) +
                          " triples; the oracle handles at most " +
                          std::to_string(kOracleMaxTriples));
    }
    for (const Triple& t : graph.triples()) {
      facts_.insert({t.subject, static_cast<int>(t.property), t.object.Pack()});
    }
    for (EntityId e = 0; e < graph.entity_count(); ++e) domain_.push_back(Term::Entity(e));
    for (uint32_t l = 0; l < graph.literal_count(); ++l) domain_.push_back(Term::Literal(l));
  }

  ResultSet Run(const Select& q) {
    std::set<Term> terms = SelectTerms(q);
    bool seen = false;
    CheckProjection(q.where, q.projection.var, &seen);
    if (!seen) throw UnboundProjection("?" + q.projection.var + " does not occur in the query");
    if (q.projection.is_count()) return ResultSet::Count(terms.size());
    std::vector<std::string> values;
    for (const Term& t : terms) values.emplace_back(graph_.TermText(t));
    return ResultSet::Rows(std::move(values));
  }

 private:
  static void CheckProjection(const GroupPattern& g, const std::string& var, bool* seen) {
    for (const Element& e : g.elements) {
      if (const auto* t = std::get_if<TriplePattern>(&e)) {
        *seen |= t->subject == var || t->object == var;
      } else if (const auto* u = std::get_if<Union>(&e)) {
        CheckProjection(*u->left, var, seen);
        CheckProjection(*u->right, var, seen);
      } else if (const auto* s = std::get_if<SubSelect>(&e)) {
        *seen |= s->select->projection.var == var;
      }
    }
  }

  std::set<Term> SelectTerms(const Select& q) {
    std::set<Term> out;
    for (const Solution& s : Solve(q.where)) {
      auto it = s.find(q.projection.var);
      if (it != s.end()) out.insert(it->second);
    }
    return out;
  }

  bool Holds(const TriplePattern& p, const Term& s, const Term& o) const {
    if (s.is_literal() || graph_.EntityClass(s.id) != p.subject_class) return false;
    return facts_.count({s.id, static_cast<int>(p.property), o.Pack()}) > 0;
  }

  bool Passes(IcuFilter& f, const Term& t) {
    return t.is_literal() && f.Matches(graph_.Literal(t.id));
  }

  std::vector<Solution> Solve(const GroupPattern& g) {
    std::vector<const TriplePattern*> patterns;
    std::vector<const Filter*> filters;
    std::vector<std::string> vars;
    auto add = [&](const std::string& v) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    };
    for (const Element& e : g.elements) {
      if (const auto* t = std::get_if<TriplePattern>(&e)) {
        patterns.push_back(t);
        add(t->subject);
        add(t->object);
      } else if (const auto* f = std::get_if<Filter>(&e)) {
        filters.push_back(f);
      }
    }
    if (vars.size() > kOracleMaxGroupVars) {
      throw GuardExceeded("group has " + std::to_string(vars.size()) + " variables");
    }
    vars = ConnectedOrder(vars, patterns);

    std::vector<std::unique_ptr<IcuFilter>> compiled;
    std::vector<const Filter*> deferred;
    std::map<std::string, std::vector<IcuFilter*>> own_filters;
    for (const Filter* f : filters) {
      if (std::find(vars.begin(), vars.end(), f->var) == vars.end()) {
        deferred.push_back(f);
        continue;
      }
      compiled.push_back(std::make_unique<IcuFilter>(*f));
      own_filters[f->var].push_back(compiled.back().get());
    }

    std::vector<Solution> out;
    Solution partial;
    Assign(vars, 0, patterns, own_filters, &partial, &out);

    for (const Element& e : g.elements) {
      std::vector<Solution> other;
      if (const auto* u = std::get_if<Union>(&e)) {
        other = Solve(*u->left);
        std::vector<Solution> right = Solve(*u->right);
        other.insert(other.end(), right.begin(), right.end());
      } else if (const auto* s = std::get_if<SubSelect>(&e)) {
        for (const Term& t : SelectTerms(*s->select)) {
          other.push_back({{s->select->projection.var, t}});
        }
      } else {
        continue;
      }
      out = Join(out, other);
    }
    for (const Filter* f : deferred) {
      IcuFilter icu(*f);
      std::erase_if(out, [&](const Solution& s) {
        auto it = s.find(f->var);
        return it == s.end() || !Passes(icu, it->second);
      });
    }
    return out;
  }

  // Orders variables so each one (where possible) shares a pattern with an
  // earlier one, which lets assigned patterns prune early.
  static std::vector<std::string> ConnectedOrder(const std::vector<std::string>& vars,
                                                 const std::vector<const TriplePattern*>& ps) {
    std::vector<std::string> order;
    std::vector<bool> used(vars.size(), false);
    auto placed = [&](const std::string& v) {
      return std::find(order.begin(), order.end(), v) != order.end();
    };
    while (order.size() < vars.size()) {
      int pick = -1;
      for (size_t i = 0; i < vars.size() && pick < 0; ++i) {
        if (used[i]) continue;
        for (const TriplePattern* p : ps) {
          if ((p->subject == vars[i] && placed(p->object)) ||
              (p->object == vars[i] && placed(p->subject))) {
            pick = static_cast<int>(i);
            break;
          }
        }
      }
      if (pick < 0) pick = static_cast<int>(std::find(used.begin(), used.end(), false) - used.begin());
      used[pick] = true;
      order.push_back(vars[pick]);
    }
    return order;
  }

  void Assign(const std::vector<std::string>& vars, size_t k,
              const std::vector<const TriplePattern*>& patterns,
              const std::map<std::string, std::vector<IcuFilter*>>& filters, Solution* partial,
              std::vector<Solution>* out) {
    if (k == vars.size()) {
      out->push_back(*partial);
      return;
    }
    const std::string& var = vars[k];
    auto fit = filters.find(var);
    for (const Term& candidate : domain_) {
      (*partial)[var] = candidate;
      bool ok = true;
      for (const TriplePattern* p : patterns) {
        if (p->subject == var && (candidate.is_literal() ||
                                  graph_.EntityClass(candidate.id) != p->subject_class)) {
          ok = false;
        }
        if (!ok) break;
        if (p->subject != var && p->object != var) continue;
        auto s = partial->find(p->subject);
        auto o = partial->find(p->object);
        if (s != partial->end() && o != partial->end() && !Holds(*p, s->second, o->second)) {
          ok = false;
          break;
        }
      }
      if (ok && fit != filters.end()) {
        for (IcuFilter* f : fit->second) {
          if (!Passes(*f, candidate)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) Assign(vars, k + 1, patterns, filters, partial, out);
    }
    partial->erase(var);
  }

  static std::vector<Solution> Join(const std::vector<Solution>& a, const std::vector<Solution>& b) {
    std::vector<Solution> out;
    for (const Solution& x : a) {
      for (const Solution& y : b) {
        Solution merged = x;
        bool ok = true;
        for (const auto& [var, term] : y) {
          auto [it, inserted] = merged.emplace(var, term);
          if (!inserted && it->second != term) {
            ok = false;
            break;
          }
        }
        if (ok) out.push_back(std::move(merged));
      }
    }
    return out;
  }

  const Graph& graph_;
  std::set<std::tuple<EntityId, int, uint64_t>> facts_;
  std::vector<Term> domain_;
};

}  // namespace

ResultSet BruteForceEvaluate(const Select& query, const Graph& graph) {
  return Oracle(graph).Run(query);
}

}  // namespace vocwqa

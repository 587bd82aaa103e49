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

#include "vocwqa/parser.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace vocwqa {
namespace {

bool LiteralAccepts(LiteralKind kind, const Token& token) {
  switch (kind) {
    case LiteralKind::kYear: return token.kind == TokenKind::kYear;
    case LiteralKind::kNumber: return token.kind == TokenKind::kNumber;
    default: return token.kind == TokenKind::kLiteral;
  }
}

bool TerminalAccepts(const Symbol& s, const Token& token) {
  switch (s.kind) {
    case Symbol::Kind::kCategory:
      return token.kind == TokenKind::kWord && token.HasCategory(s.name);
    case Symbol::Kind::kPunct:
      return token.kind == TokenKind::kPunct && token.normalized == s.name;
    case Symbol::Kind::kLiteral:
      return LiteralAccepts(s.literal, token);
    default:
      return false;
  }
}

std::string LeafLabel(const Symbol& s) {
  return s.kind == Symbol::Kind::kPunct ? "PUNCT" : s.name;
}

using Cont = std::function<bool(size_t)>;

class Matcher {
 public:
  Matcher(std::span<const Token> tokens, const Grammar& grammar)
      : tokens_(tokens), grammar_(grammar) {}

  std::optional<ParseTree> TryRule(const GrammarRule& rule) {
    trail_.clear();
    bool ok = Seq(rule.body, 0, 0, [&](size_t pos) {
      if (pos == tokens_.size()) return true;
      Fail(pos, "end of question");
      return false;
    });
    if (!ok) return std::nullopt;
    ParseTree tree;
    tree.rule_id = rule.id;
    tree.root.label = rule.id;
    tree.tokens.assign(tokens_.begin(), tokens_.end());
    std::vector<ParseNode*> stack = {&tree.root};
    for (const Event& e : trail_) {
      switch (e.type) {
        case Event::kEnter:
          stack.back()->children.push_back({e.label, std::nullopt, {}});
          stack.push_back(&stack.back()->children.back());
          break;
        case Event::kExit:
          stack.pop_back();
          break;
        case Event::kLeaf:
          stack.back()->children.push_back({e.label, e.token, {}});
          break;
      }
    }
    return tree;
  }

  NoParse failure() const {
    return {furthest_, std::vector<std::string>(expected_.begin(), expected_.end())};
  }

 private:
  struct Event {
    enum Type { kEnter, kLeaf, kExit } type;
    std::string label;
    size_t token = 0;
  };

  void Fail(size_t pos, const std::string& expected) {
    if (pos > furthest_) {
      furthest_ = pos;
      expected_.clear();
    }
    if (pos == furthest_) expected_.insert(expected);
  }

  bool Seq(const Sequence& seq, size_t i, size_t pos, const Cont& k) {
    if (i == seq.size()) return k(pos);
    return Sym(seq[i], pos, [&](size_t next) { return Seq(seq, i + 1, next, k); });
  }

  bool Sym(const Symbol& s, size_t pos, const Cont& k) {
    switch (s.kind) {
      case Symbol::Kind::kOptional:
        if (Seq(s.children, 0, pos, k)) return true;
        return k(pos);
      case Symbol::Kind::kRepeat:
        return Repeat(s.children, pos, k);
      case Symbol::Kind::kPhrase:
        return Phrase(s.name, pos, k);
      default:
        break;
    }
    if (pos >= tokens_.size() || !TerminalAccepts(s, tokens_[pos])) {
      Fail(pos, s.Label());
      return false;
    }
    size_t mark = trail_.size();
    trail_.push_back({Event::kLeaf, LeafLabel(s), pos});
    if (k(pos + 1)) return true;
    trail_.resize(mark);
    return false;
  }

  bool Repeat(const Sequence& body, size_t pos, const Cont& k) {
    // One more iteration first; an iteration must consume input.
    bool more = Seq(body, 0, pos, [&](size_t next) {
      return next > pos && Repeat(body, next, k);
    });
    if (more) return true;
    return k(pos);
  }

  bool Phrase(const std::string& name, size_t pos, const Cont& k) {
    const Production* phrase = grammar_.FindPhrase(name);
    size_t mark = trail_.size();
    for (const Sequence& alt : phrase->alternatives) {
      trail_.push_back({Event::kEnter, name, 0});
      bool ok = Seq(alt, 0, pos, [&](size_t next) {
        size_t exit_mark = trail_.size();
        trail_.push_back({Event::kExit, {}, 0});
        if (k(next)) return true;
        trail_.resize(exit_mark);
        return false;
      });
      if (ok) return true;
      trail_.resize(mark);
    }
    return false;
  }

  std::span<const Token> tokens_;
  const Grammar& grammar_;
  std::vector<Event> trail_;
  size_t furthest_ = 0;
  std::set<std::string> expected_;
};

void Render(const ParseTree& tree, const ParseNode& node, int depth,
            std::ostringstream& out) {
  out << std::string(depth * 2, ' ') << node.label;
  if (node.is_leaf()) out << " \"" << tree.tokens[*node.token].surface << "\"";
  out << '\n';
  for (const auto& child : node.children) Render(tree, child, depth + 1, out);
}

void CollectLeaves(const ParseNode& node, std::vector<const ParseNode*>* out) {
  if (node.is_leaf()) {
    out->push_back(&node);
    return;
  }
  for (const auto& child : node.children) CollectLeaves(child, out);
}

// Matches a sequence of symbols against a sequence of already-built nodes.
class DerivationChecker {
 public:
  DerivationChecker(const ParseTree& tree, const Grammar& grammar)
      : tree_(tree), grammar_(grammar) {}

  bool Children(const Sequence& seq, const std::vector<ParseNode>& nodes) {
    return Seq(seq, 0, nodes, 0, [&](size_t pos) { return pos == nodes.size(); });
  }

 private:
  using NodeCont = std::function<bool(size_t)>;

  bool Seq(const Sequence& seq, size_t i, const std::vector<ParseNode>& nodes,
           size_t pos, const NodeCont& k) {
    if (i == seq.size()) return k(pos);
    return Sym(seq[i], nodes, pos,
               [&](size_t next) { return Seq(seq, i + 1, nodes, next, k); });
  }

  bool Sym(const Symbol& s, const std::vector<ParseNode>& nodes, size_t pos,
           const NodeCont& k) {
    switch (s.kind) {
      case Symbol::Kind::kOptional:
        return Seq(s.children, 0, nodes, pos, k) || k(pos);
      case Symbol::Kind::kRepeat:
        return Repeat(s.children, nodes, pos, k);
      default:
        break;
    }
    if (pos >= nodes.size()) return false;
    const ParseNode& node = nodes[pos];
    if (s.kind == Symbol::Kind::kPhrase) {
      if (node.is_leaf() || node.label != s.name) return false;
      const Production* phrase = grammar_.FindPhrase(s.name);
      bool derived = std::any_of(
          phrase->alternatives.begin(), phrase->alternatives.end(),
          [&](const Sequence& alt) { return Children(alt, node.children); });
      return derived && k(pos + 1);
    }
    if (!node.is_leaf() || node.label != LeafLabel(s)) return false;
    if (*node.token >= tree_.tokens.size()) return false;
    return TerminalAccepts(s, tree_.tokens[*node.token]) && k(pos + 1);
  }

  bool Repeat(const Sequence& body, const std::vector<ParseNode>& nodes, size_t pos,
              const NodeCont& k) {
    bool more = Seq(body, 0, nodes, pos, [&](size_t next) {
      return next > pos && Repeat(body, nodes, next, k);
    });
    return more || k(pos);
  }

  const ParseTree& tree_;
  const Grammar& grammar_;
};

}  // namespace

std::vector<const ParseNode*> ParseTree::Leaves() const {
  std::vector<const ParseNode*> leaves;
  CollectLeaves(root, &leaves);
  return leaves;
}

ParseResult Parse(std::span<const Token> tokens, const Grammar& grammar) {
  Matcher matcher(tokens, grammar);
  for (const GrammarRule& rule : grammar.rules()) {
    if (auto tree = matcher.TryRule(rule)) return ParseResult(std::move(*tree));
  }
  return ParseResult(matcher.failure());
}

std::string RenderTree(const ParseTree& tree) {
  std::ostringstream out;
  Render(tree, tree.root, 0, out);
  return out.str();
}

bool VerifyDerivation(const ParseTree& tree, const Grammar& grammar) {
  const GrammarRule* rule = grammar.FindRule(tree.rule_id);
  if (rule == nullptr || tree.root.label != tree.rule_id) return false;
  std::vector<const ParseNode*> leaves = tree.Leaves();
  if (leaves.size() != tree.tokens.size()) return false;
  for (size_t i = 0; i < leaves.size(); ++i) {
    if (*leaves[i]->token != i) return false;
  }
  return DerivationChecker(tree, grammar).Children(rule->body, tree.root.children);
}

}  // namespace vocwqa

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

#ifndef VOCWQA_PARSER_H_
#define VOCWQA_PARSER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vocwqa/grammar.h"
#include "vocwqa/lexicon.h"

namespace vocwqa {

// Internal nodes are labelled with the rule id or a sub-phrase name; leaves
// with the lexicon category, literal kind (TITLE, PERSON, ...) or PUNCT and
// point at the token they matched.
struct ParseNode {
  std::string label;
  std::optional<size_t> token;
  std::vector<ParseNode> children;

  bool is_leaf() const { return token.has_value(); }
  bool operator==(const ParseNode&) const = default;
};

struct ParseTree {
  std::string rule_id;
  ParseNode root;
  std::vector<Token> tokens;

  // Leaves in order. For a valid tree these are 0..tokens.size()-1.
  std::vector<const ParseNode*> Leaves() const;
};

// No rule consumed the whole token sequence.
struct NoParse {
  size_t position = 0;                // furthest token index any rule reached
  std::vector<std::string> expected;  // symbols tried at that index
};

class ParseResult {
 public:
  explicit ParseResult(ParseTree tree) : value_(std::move(tree)) {}
  explicit ParseResult(NoParse failure) : value_(std::move(failure)) {}

  bool ok() const { return std::holds_alternative<ParseTree>(value_); }
  const ParseTree& tree() const { return std::get<ParseTree>(value_); }
  ParseTree& tree() { return std::get<ParseTree>(value_); }
  const NoParse& failure() const { return std::get<NoParse>(value_); }

 private:
  std::variant<ParseTree, NoParse> value_;
};

// Tries the grammar's rules in order and returns the first one that
// consumes every token. Optional and repeated symbols are matched greedily
// and backtracked within a rule.
ParseResult Parse(std::span<const Token> tokens, const Grammar& grammar);

// Indented rendering, one node per line; leaves show their token surface.
std::string RenderTree(const ParseTree& tree);

// Re-derives the tree's node sequence from the matched rule body. True iff
// the tree is a derivation of its rule and its leaves cover the tokens in
// order.
bool VerifyDerivation(const ParseTree& tree, const Grammar& grammar);

}  // namespace vocwqa

#endif  // VOCWQA_PARSER_H_

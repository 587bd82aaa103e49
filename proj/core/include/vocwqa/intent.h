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

#ifndef VOCWQA_INTENT_H_
#define VOCWQA_INTENT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vocwqa/error.h"
#include "vocwqa/parser.h"

namespace vocwqa {

// What a question asks for.
enum class Target {
  kAuthor,
  kPublisher,
  kYearOfWriting,
  kYearOfPublishing,
  kSubject,
  kBookList,
  kPlaceOfPublication,
  kPlaceOfPublisher,
  kPrice,
  kCountBooks,
};

// Constraint slots, in the order queries list them.
enum class Slot { kAuthor, kPublisher, kYear, kSubject, kPlace, kTitle };

enum class Connective { kAnd, kOr };

const char* TargetName(Target target);
bool ParseTarget(std::string_view name, Target* target);
const char* SlotName(Slot slot);

// The slot a target asks about, if any. BookList, Price and CountBooks
// have none.
std::optional<Slot> OwnSlot(Target target);

// One literal, or several joined by a single connective.
class SlotValue {
 public:
  static SlotValue Single(std::string value);
  // Requires at least two values.
  static SlotValue Multi(Connective connective, std::vector<std::string> values);

  bool is_multi() const { return values_.size() > 1; }
  const std::vector<std::string>& values() const { return values_; }
  const std::string& single() const { return values_.front(); }
  Connective connective() const { return connective_; }

  bool operator==(const SlotValue&) const = default;

 private:
  std::vector<std::string> values_;
  Connective connective_ = Connective::kAnd;
};

struct QueryIntent {
  Target target = Target::kBookList;
  std::map<Slot, SlotValue> slots;

  // At most one multi-valued slot and the target's own slot unused.
  bool IsValid() const;
  const SlotValue* multi_slot(Slot* which = nullptr) const;
  bool operator==(const QueryIntent&) const = default;
};

class IntentError : public Error {
 public:
  enum class Code {
    kMixedConnective,
    kMultipleMultiSlots,
    kTargetSlotConflict,
    kUnknownRule,
  };
  IntentError(Code code, const std::string& message, size_t token = 0)
      : Error(message), code_(code), token_(token) {}
  Code code() const { return code_; }
  // Token index the error points at.
  size_t token() const { return token_; }

 private:
  Code code_;
  size_t token_;
};

// Rule id -> target table.
class RuleTargets {
 public:
  // Format: rule<TAB>target, '#' comments.
  static RuleTargets Load(std::string_view source);
  static const RuleTargets& Default();

  std::optional<Target> Find(std::string_view rule_id) const;
  const std::map<std::string, Target, std::less<>>& entries() const { return map_; }

 private:
  std::map<std::string, Target, std::less<>> map_;
};

// Lowers a parse tree to a question target plus constraint slots. Literal
// leaves fill slots by kind; repeated books fold into one multi-valued title
// slot joined by the conjunction used.
QueryIntent BuildIntent(const ParseTree& tree,
                        const RuleTargets& targets = RuleTargets::Default());

// An intent split on its multi-valued slot.
struct DecomposedIntent {
  enum class Kind { kSingle, kAndChain, kOrUnion };
  Kind kind = Kind::kSingle;
  std::vector<QueryIntent> parts;  // single-valued, in surface order
};

DecomposedIntent Decompose(const QueryIntent& intent);

// Single-line renderings, e.g. Author{title="Toan", year="2009"}.
std::string RenderIntent(const QueryIntent& intent);
std::string RenderDecomposed(const DecomposedIntent& decomposed);

}  // namespace vocwqa

#endif  // VOCWQA_INTENT_H_

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

#include "vocwqa/intent.h"

#include <algorithm>
#include <array>
#include <sstream>

#include "vocwqa/resources.h"
#include "vocwqa/text.h"

namespace vocwqa {
namespace {

constexpr std::array<std::pair<Target, std::string_view>, 10> kTargetNames = {{
    {Target::kAuthor, "Author"},
    {Target::kPublisher, "Publisher"},
    {Target::kYearOfWriting, "YearOfWriting"},
    {Target::kYearOfPublishing, "YearOfPublishing"},
    {Target::kSubject, "Subject"},
    {Target::kBookList, "BookList"},
    {Target::kPlaceOfPublication, "PlaceOfPublication"},
    {Target::kPlaceOfPublisher, "PlaceOfPublisher"},
    {Target::kPrice, "Price"},
    {Target::kCountBooks, "CountBooks"},
}};

std::optional<Slot> SlotForLeaf(std::string_view label) {
  if (label == "TITLE") return Slot::kTitle;
  if (label == "PERSON") return Slot::kAuthor;
  if (label == "PUBLISHER_NAME") return Slot::kPublisher;
  if (label == "SUBJECT_NAME") return Slot::kSubject;
  if (label == "PLACE_NAME") return Slot::kPlace;
  if (label == "YEAR") return Slot::kYear;
  return std::nullopt;
}

std::string Quote(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* TargetName(Target target) {
  for (const auto& [t, name] : kTargetNames) {
    if (t == target) return name.data();
  }
  return "?";
}

bool ParseTarget(std::string_view name, Target* target) {
  for (const auto& [t, n] : kTargetNames) {
    if (n == name) {
      *target = t;
      return true;
    }
  }
  return false;
}

const char* SlotName(Slot slot) {
  switch (slot) {
    case Slot::kAuthor: return "author";
    case Slot::kPublisher: return "publisher";
    case Slot::kYear: return "year";
    case Slot::kSubject: return "subject";
    case Slot::kPlace: return "place";
    case Slot::kTitle: return "title";
  }
  return "?";
}

std::optional<Slot> OwnSlot(Target target) {
  switch (target) {
    case Target::kAuthor: return Slot::kAuthor;
    case Target::kPublisher: return Slot::kPublisher;
    case Target::kYearOfWriting:
    case Target::kYearOfPublishing: return Slot::kYear;
    case Target::kSubject: return Slot::kSubject;
    case Target::kPlaceOfPublication:
    case Target::kPlaceOfPublisher: return Slot::kPlace;
    default: return std::nullopt;
  }
}

SlotValue SlotValue::Single(std::string value) {
  SlotValue v;
  v.values_.push_back(std::move(value));
  return v;
}

SlotValue SlotValue::Multi(Connective connective, std::vector<std::string> values) {
  if (values.size() < 2) throw Error("multi-valued slot needs at least two values");
  SlotValue v;
  v.values_ = std::move(values);
  v.connective_ = connective;
  return v;
}

const SlotValue* QueryIntent::multi_slot(Slot* which) const {
  for (const auto& [slot, value] : slots) {
    if (value.is_multi()) {
      if (which != nullptr) *which = slot;
      return &value;
    }
  }
  return nullptr;
}

bool QueryIntent::IsValid() const {
  int multi = 0;
  for (const auto& [slot, value] : slots) {
    if (value.values().empty()) return false;
    if (value.is_multi()) ++multi;
  }
  if (multi > 1) return false;
  auto own = OwnSlot(target);
  return !own || slots.count(*own) == 0;
}

RuleTargets RuleTargets::Load(std::string_view source) {
  RuleTargets table;
  std::istringstream in{std::string(source)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    size_t tab = trimmed.find('\t');
    Target target;
    if (tab == std::string::npos || !ParseTarget(Trim(trimmed.substr(tab + 1)), &target)) {
      throw Error("rule target table line " + std::to_string(line_no) + ": malformed");
    }
    table.map_[Trim(trimmed.substr(0, tab))] = target;
  }
  return table;
}

const RuleTargets& RuleTargets::Default() {
  static const RuleTargets* table = new RuleTargets(Load(resources::kRuleTargets));
  return *table;
}

std::optional<Target> RuleTargets::Find(std::string_view rule_id) const {
  auto it = map_.find(rule_id);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

QueryIntent BuildIntent(const ParseTree& tree, const RuleTargets& targets) {
  auto target = targets.Find(tree.rule_id);
  if (!target) {
    throw IntentError(IntentError::Code::kUnknownRule,
                      "no target for rule " + tree.rule_id);
  }
  QueryIntent intent;
  intent.target = *target;

  std::map<Slot, std::vector<std::string>> values;
  std::map<Slot, size_t> first_token;
  std::optional<Connective> connective;
  for (const ParseNode* leaf : tree.Leaves()) {
    const Token& token = tree.tokens[*leaf->token];
    if (leaf->label == "conjunction") {
      Connective c = token.normalized == "hoặc" ? Connective::kOr : Connective::kAnd;
      if (connective && *connective != c) {
        throw IntentError(IntentError::Code::kMixedConnective,
                          "cannot mix 'và' and 'hoặc' in one list", *leaf->token);
      }
      connective = c;
      continue;
    }
    auto slot = SlotForLeaf(leaf->label);
    if (!slot) continue;
    auto& list = values[*slot];
    std::string folded = FoldCase(token.surface);
    bool seen = std::any_of(list.begin(), list.end(),
                            [&](const std::string& v) { return FoldCase(v) == folded; });
    if (!seen) list.push_back(token.surface);
    first_token.emplace(*slot, *leaf->token);
  }

  int multi = 0;
  for (auto& [slot, list] : values) {
    if (list.size() == 1) {
      intent.slots.emplace(slot, SlotValue::Single(list.front()));
    } else {
      ++multi;
      if (multi > 1) {
        throw IntentError(IntentError::Code::kMultipleMultiSlots,
                          "only one slot may take several values", first_token[slot]);
      }
      intent.slots.emplace(slot, SlotValue::Multi(connective.value_or(Connective::kAnd),
                                                  std::move(list)));
    }
  }
  if (auto own = OwnSlot(intent.target); own && intent.slots.count(*own) > 0) {
    throw IntentError(IntentError::Code::kTargetSlotConflict,
                      std::string("slot ") + SlotName(*own) + " is the question target",
                      first_token[*own]);
  }
  return intent;
}

DecomposedIntent Decompose(const QueryIntent& intent) {
  DecomposedIntent out;
  Slot which;
  const SlotValue* multi = intent.multi_slot(&which);
  if (multi == nullptr) {
    out.parts.push_back(intent);
    return out;
  }
  out.kind = multi->connective() == Connective::kAnd ? DecomposedIntent::Kind::kAndChain
                                                     : DecomposedIntent::Kind::kOrUnion;
  for (const std::string& value : multi->values()) {
    QueryIntent part = intent;
    part.slots.insert_or_assign(which, SlotValue::Single(value));
    out.parts.push_back(std::move(part));
  }
  return out;
}

std::string RenderIntent(const QueryIntent& intent) {
  std::string out = TargetName(intent.target);
  out += '{';
  bool first = true;
  for (const auto& [slot, value] : intent.slots) {
    if (!first) out += ", ";
    first = false;
    out += SlotName(slot);
    out += '=';
    if (!value.is_multi()) {
      out += Quote(value.single());
      continue;
    }
    out += value.connective() == Connective::kAnd ? "AND[" : "OR[";
    for (size_t i = 0; i < value.values().size(); ++i) {
      if (i > 0) out += ", ";
      out += Quote(value.values()[i]);
    }
    out += ']';
  }
  return out + '}';
}

std::string RenderDecomposed(const DecomposedIntent& decomposed) {
  if (decomposed.kind == DecomposedIntent::Kind::kSingle) {
    return RenderIntent(decomposed.parts.front());
  }
  std::string out =
      decomposed.kind == DecomposedIntent::Kind::kAndChain ? "AND-CHAIN[" : "OR-UNION[";
  for (size_t i = 0; i < decomposed.parts.size(); ++i) {
    if (i > 0) out += "; ";
    out += RenderIntent(decomposed.parts[i]);
  }
  return out + ']';
}

}  // namespace vocwqa

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

#ifndef VOCWQA_RESOURCES_H_
#define VOCWQA_RESOURCES_H_

#include <string_view>

// Data files compiled into the library from core/data/.
namespace vocwqa::resources {

extern const std::string_view kLexicon;
extern const std::string_view kGrammar;
extern const std::string_view kRuleTargets;

}  // namespace vocwqa::resources

#endif  // VOCWQA_RESOURCES_H_

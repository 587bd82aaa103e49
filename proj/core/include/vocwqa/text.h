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

#ifndef VOCWQA_TEXT_H_
#define VOCWQA_TEXT_H_

#include <string>
#include <string_view>

namespace vocwqa {

// Unicode NFC composition. Invalid UTF-8 is passed through ICU's
// replacement handling.
std::string ToNfc(std::string_view text);

// Lowercases after NFC. Diacritics are preserved.
std::string FoldCase(std::string_view text);

// NFC, whitespace runs collapsed to one space, outer whitespace trimmed.
// Case is kept.
std::string CleanText(std::string_view text);

// CleanText followed by lowercasing. Idempotent.
std::string Normalize(std::string_view text);

// Trims ASCII and Unicode whitespace from both ends.
std::string Trim(std::string_view text);

}  // namespace vocwqa

#endif  // VOCWQA_TEXT_H_

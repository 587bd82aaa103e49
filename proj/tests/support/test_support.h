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

#ifndef VOCWQA_TESTS_SUPPORT_TEST_SUPPORT_H_
#define VOCWQA_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "vocwqa/corpus.h"
#include "vocwqa/intent.h"
#include "vocwqa/kb.h"

namespace vocwqa::testing {

std::filesystem::path TestDataDir();
std::filesystem::path DemoCorpusPath();
std::string ReadFile(const std::filesystem::path& path);

// Removes whitespace outside double-quoted strings.
std::string StripWhitespace(std::string_view text);

// Three authors and three courses: An wrote Toan and Van, Binh wrote Toan
// and Ly, Cuong wrote Toan, Van and Ly.
Graph NestedExampleGraph();

// Literal pools shared by the graph and intent generators, so random
// filters hit random data often.
struct Vocabulary {
  std::vector<std::string> titles;
  std::vector<std::string> authors;
  std::vector<std::string> publishers;
  std::vector<std::string> years;
  std::vector<std::string> subjects;
  std::vector<std::string> places;
  std::vector<std::string> prices;
};
const Vocabulary& FuzzVocabulary();

// Random records from the fuzz vocabulary, ingested and closed under
// inference; at most max_triples triples.
Graph RandomGraph(std::mt19937& rng, size_t max_triples = 200);

// Valid random intent. With allow_multi, one slot may hold 2-3 values
// joined by a random connective.
QueryIntent RandomIntent(std::mt19937& rng, bool allow_multi = true);

// Random intent whose one multi slot has exactly the given connective.
QueryIntent RandomMultiIntent(std::mt19937& rng, Connective connective);

// JSON Lines corpus of n courses with titles "Tài liệu 0001", ...
std::string SyntheticCorpus(size_t courses, uint32_t seed);

}  // namespace vocwqa::testing

#endif  // VOCWQA_TESTS_SUPPORT_TEST_SUPPORT_H_

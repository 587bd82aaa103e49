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

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "vocwqa/app.h"
#include "vocwqa/corpus.h"
#include "vocwqa/engine.h"
#include "vocwqa/grammar.h"
#include "vocwqa/lexicon.h"
#include "vocwqa/parser.h"

namespace vocwqa {
namespace {

// Demo-like corpus of n courses.
std::string MakeCorpus(int n) {
  const char* publishers[] = {"Giáo Dục", "Thống Kê", "Trẻ", "Lao Động"};
  const char* subjects[] = {"Toán học", "Tin học", "Văn học", "Vật lý", "Kinh tế"};
  std::string out;
  for (int i = 0; i < n; ++i) {
    std::string id = std::to_string(i);
    out += R"({"id":"b)" + id + R"(","name":"Sach )" + id + R"(","authors":["Tac Gia )" +
           std::to_string(i % 97) + R"("],"publisher":")" + publishers[i % 4] +
           R"(","year":")" + std::to_string(1990 + i % 30) + R"(","subject":")" +
           subjects[i % 5] + R"(","place":"Hà Nội","price":"50.000 đồng"})" + "\n";
  }
  return out;
}

const Corpus& CorpusOf(int n) {
  static std::map<int, Corpus>* cache = new std::map<int, Corpus>();
  auto it = cache->find(n);
  if (it == cache->end()) it = cache->emplace(n, LoadCorpusText(MakeCorpus(n))).first;
  return it->second;
}

constexpr const char* kQuestions[] = {
    "Ai đã viết sách \"Sach 7\"?",
    "Trong năm 2009, những sách thuộc chủ đề Tin học là gì?",
    "Ai đã viết sách \"Sach 1\" và sách \"Sach 98\"?",
    "Nhà xuất bản Giáo Dục đã phát hành bao nhiêu cuốn sách?",
};

void BM_Parse(benchmark::State& state) {
  const char* q = kQuestions[state.range(0)];
  for (auto _ : state) {
    auto tokens = Segment(q, Lexicon::Default());
    benchmark::DoNotOptimize(Parse(tokens, Grammar::Default()));
  }
}
BENCHMARK(BM_Parse)->DenseRange(0, 3);

void BM_Answer(benchmark::State& state) {
  const Corpus& corpus = CorpusOf(static_cast<int>(state.range(1)));
  const char* q = kQuestions[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(Answer(q, corpus.graph));
}
BENCHMARK(BM_Answer)->ArgsProduct({{0, 1, 2, 3}, {100, 1000, 10000}})->Unit(benchmark::kMicrosecond);

void BM_LoadCorpus(benchmark::State& state) {
  std::string text = MakeCorpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(LoadCorpusText(text));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LoadCorpus)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vocwqa

BENCHMARK_MAIN();

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

#include "test_support.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vocwqa::testing {
namespace {

template <typename T>
const T& Pick(std::mt19937& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<size_t>(0, items.size() - 1)(rng)];
}

bool Chance(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Random ASCII case flips, so filters must match case-insensitively.
std::string VaryCase(std::mt19937& rng, std::string s) {
  if (!Chance(rng, 0.3)) return s;
  for (char& c : s) {
    if (std::isalpha(static_cast<unsigned char>(c)) && Chance(rng, 0.5)) {
      c = std::isupper(static_cast<unsigned char>(c)) ? std::tolower(c) : std::toupper(c);
    }
  }
  return s;
}

const std::vector<std::string>& PoolFor(Slot slot) {
  const Vocabulary& v = FuzzVocabulary();
  switch (slot) {
    case Slot::kAuthor: return v.authors;
    case Slot::kPublisher: return v.publishers;
    case Slot::kYear: return v.years;
    case Slot::kSubject: return v.subjects;
    case Slot::kPlace: return v.places;
    case Slot::kTitle: return v.titles;
  }
  return v.titles;
}

constexpr Slot kSlots[] = {Slot::kAuthor, Slot::kPublisher, Slot::kYear,
                           Slot::kSubject, Slot::kPlace, Slot::kTitle};

Target RandomTarget(std::mt19937& rng) {
  return static_cast<Target>(std::uniform_int_distribution<int>(0, 9)(rng));
}

std::vector<std::string> DistinctValues(std::mt19937& rng, Slot slot, size_t n) {
  std::vector<std::string> pool = PoolFor(slot);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(n, pool.size()));
  for (auto& v : pool) v = VaryCase(rng, v);
  return pool;
}

QueryIntent MakeIntent(std::mt19937& rng, std::optional<Connective> multi) {
  QueryIntent intent;
  intent.target = RandomTarget(rng);
  auto own = OwnSlot(intent.target);
  std::vector<Slot> usable;
  for (Slot s : kSlots) {
    if (s != own) usable.push_back(s);
  }
  for (Slot s : usable) {
    if (Chance(rng, 0.35)) intent.slots.emplace(s, SlotValue::Single(VaryCase(rng, Pick(rng, PoolFor(s)))));
  }
  if (multi) {
    Slot s = Pick(rng, usable);
    size_t n = std::uniform_int_distribution<size_t>(2, 3)(rng);
    intent.slots.insert_or_assign(s, SlotValue::Multi(*multi, DistinctValues(rng, s, n)));
  }
  return intent;
}

}  // namespace

std::filesystem::path TestDataDir() { return VOCWQA_TEST_DATA_DIR; }
std::filesystem::path DemoCorpusPath() { return VOCWQA_DEMO_CORPUS; }

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string StripWhitespace(std::string_view text) {
  std::string out;
  bool in_string = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      out += c;
      if (c == '\\' && i + 1 < text.size()) out += text[++i];
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
      out += c;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      out += c;
    }
  }
  return out;
}

Graph NestedExampleGraph() {
  Graph g;
  EntityId an = g.AddEntity(Class::kAuthor, "An");
  EntityId binh = g.AddEntity(Class::kAuthor, "Binh");
  EntityId cuong = g.AddEntity(Class::kAuthor, "Cuong");
  EntityId toan = g.AddEntity(Class::kCourse, "k1", "Toan");
  EntityId van = g.AddEntity(Class::kCourse, "k2", "Van");
  EntityId ly = g.AddEntity(Class::kCourse, "k3", "Ly");
  for (auto [a, c] : {std::pair{an, toan}, {an, van}, {binh, toan}, {binh, ly}, {cuong, toan},
                      {cuong, van}, {cuong, ly}}) {
    g.Insert(a, Property::kWrite, c);
  }
  ApplyInference(g);
  return g;
}

const Vocabulary& FuzzVocabulary() {
  static const Vocabulary* v = new Vocabulary{
      {"Toan", "Van", "Ly", "Hoa", "Tin học đại cương", "C++ (nâng cao)", "Sinh"},
      {"Nguyễn Văn An", "Trần Thị Bình", "Lê Minh Châu", "Phạm Quốc Dũng"},
      {"Giáo Dục", "Thống Kê", "Trẻ"},
      {"2007", "2008", "2009", "2010"},
      {"Toán học", "Văn học", "Tin học"},
      {"Hà Nội", "Huế", "Đà Nẵng"},
      {"45.000 đồng", "50.000 đồng", "$10"},
  };
  return *v;
}

Graph RandomGraph(std::mt19937& rng, size_t max_triples) {
  const Vocabulary& v = FuzzVocabulary();
  size_t records = std::uniform_int_distribution<size_t>(2, 14)(rng);
  while (true) {
    Graph g;
    for (size_t i = 0; i < records; ++i) {
      CourseRecord r;
      r.id = "r" + std::to_string(i);
      r.name = Pick(rng, v.titles);
      size_t authors = std::uniform_int_distribution<size_t>(0, 2)(rng);
      for (size_t a = 0; a < authors; ++a) r.authors.push_back(Pick(rng, v.authors));
      if (Chance(rng, 0.8)) r.publisher = Pick(rng, v.publishers);
      if (Chance(rng, 0.8)) r.year = Pick(rng, v.years);
      if (Chance(rng, 0.8)) r.subject = Pick(rng, v.subjects);
      if (Chance(rng, 0.6)) r.place = Pick(rng, v.places);
      if (Chance(rng, 0.5)) r.price = Pick(rng, v.prices);
      InsertKeyed(g, RecordToTriples(r));
    }
    ApplyInference(g);
    if (g.triple_count() <= max_triples || records == 1) return g;
    --records;
  }
}

QueryIntent RandomIntent(std::mt19937& rng, bool allow_multi) {
  std::optional<Connective> multi;
  if (allow_multi && Chance(rng, 0.4)) {
    multi = Chance(rng, 0.5) ? Connective::kAnd : Connective::kOr;
  }
  return MakeIntent(rng, multi);
}

QueryIntent RandomMultiIntent(std::mt19937& rng, Connective connective) {
  return MakeIntent(rng, connective);
}

std::string SyntheticCorpus(size_t courses, uint32_t seed) {
  std::mt19937 rng(seed);
  const std::vector<std::string> family = {"Nguyễn", "Trần", "Lê", "Phạm", "Hoàng", "Vũ", "Đỗ", "Ngô"};
  const std::vector<std::string> middle = {"Văn", "Thị", "Minh", "Quốc", "Đức", "Thanh", "Bảo"};
  const std::vector<std::string> given = {"An", "Bình", "Châu", "Dũng", "Hải", "Hương", "Khoa",
                                          "Long", "Mai", "Nam", "Phúc", "Quân", "Sơn", "Tâm"};
  const std::vector<std::string> publishers = {"Giáo Dục", "Thống Kê", "Trẻ", "Khoa Học Kỹ Thuật",
                                               "Đại Học Quốc Gia", "Tài Chính", "Lao Động"};
  const std::vector<std::string> cities = {"Hà Nội", "Huế", "Đà Nẵng", "Cần Thơ"};
  const std::vector<std::string> subjects = {"Toán học", "Văn học", "Tin học", "Vật lý",
                                             "Hóa học", "Kinh tế", "Lịch sử", "Địa lý"};
  std::string out;
  for (size_t i = 1; i <= courses; ++i) {
    char title[32];
    std::snprintf(title, sizeof(title), "Tài liệu %04zu", i);
    nlohmann::json j;
    j["id"] = "s" + std::to_string(i);
    j["name"] = title;
    std::vector<std::string> authors;
    size_t n = std::uniform_int_distribution<size_t>(1, 3)(rng);
    for (size_t a = 0; a < n; ++a) {
      authors.push_back(Pick(rng, family) + " " + Pick(rng, middle) + " " + Pick(rng, given));
    }
    j["authors"] = authors;
    size_t p = std::uniform_int_distribution<size_t>(0, publishers.size() - 1)(rng);
    j["publisher"] = publishers[p];
    j["place"] = cities[p % cities.size()];
    j["year"] = std::to_string(std::uniform_int_distribution<int>(1990, 2020)(rng));
    j["subject"] = Pick(rng, subjects);
    j["price"] = std::to_string(std::uniform_int_distribution<int>(20, 99)(rng)) + ".000 đồng";
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace vocwqa::testing

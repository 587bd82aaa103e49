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

#include "vocwqa/text.h"

#include <gtest/gtest.h>

namespace vocwqa {
namespace {

TEST(TextTest, ToNfcComposesDecomposedInput) {
  // "cấu trúc dữ liệu" with combining marks.
  const std::string nfd = "ca\xCC\x82\xCC\x81u tru\xCC\x81" "c du\xCC\x9B\xCC\x83 lie\xCC\x82\xCC\xA3u";
  EXPECT_EQ(ToNfc(nfd), "cấu trúc dữ liệu");
  EXPECT_EQ(ToNfc("cấu trúc dữ liệu"), "cấu trúc dữ liệu");
}

TEST(TextTest, FoldCaseKeepsDiacritics) {
  EXPECT_EQ(FoldCase("NGUYỄN Văn AN"), "nguyễn văn an");
  EXPECT_NE(FoldCase("Toán"), FoldCase("Toan"));
  EXPECT_EQ(FoldCase("ĐẠI HỌC"), "đại học");
}

TEST(TextTest, CleanTextCollapsesWhitespaceAndKeepsCase) {
  EXPECT_EQ(CleanText("  Ai   đã\tviết \n sách Toan?  "), "Ai đã viết sách Toan?");
  EXPECT_EQ(CleanText(""), "");
}

TEST(TextTest, NormalizeIsIdempotent) {
  for (const char* s : {"  Ai ĐÃ viết  ", "Sách \"Toan\"", "", "Năm 2009,"}) {
    std::string once = Normalize(s);
    EXPECT_EQ(Normalize(once), once) << s;
  }
  EXPECT_EQ(Normalize("  Ai ĐÃ viết  "), "ai đã viết");
}

TEST(TextTest, TrimHandlesUnicodeSpace) {
  EXPECT_EQ(Trim("\xC2\xA0 abc \t"), "abc");
  EXPECT_EQ(Trim("   "), "");
}

}  // namespace
}  // namespace vocwqa

// Copyright 2026 The Nefnir Authors.
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

#include "nefnir/utf8.h"

#include <gtest/gtest.h>

namespace nefnir::utf8 {
namespace {

TEST(Utf8Test, LengthCountsCodePoints) {
  EXPECT_EQ(length("bækur"), 5u);
  EXPECT_EQ(std::string("bækur").size(), 6u);
  EXPECT_EQ(length("fjallgönguskó"), 13u);
  EXPECT_EQ(length(""), 0u);
  EXPECT_EQ(length("ðþöæ"), 4u);
}

TEST(Utf8Test, SuffixNeverSplitsCharacters) {
  EXPECT_EQ(suffix("bækur", 4), "ækur");
  EXPECT_EQ(suffix("skó", 1), "ó");
  EXPECT_EQ(suffix("skó", 0), "");
  EXPECT_EQ(suffix("skó", 3), "skó");
}

TEST(Utf8Test, CommonPrefixStopsAtCharacterBoundary) {
  // æ (C3 A6) and ó (C3 B3) share their lead byte.
  EXPECT_EQ(common_prefix_bytes("bæ", "bó"), 1u);
  EXPECT_EQ(common_prefix_bytes("kettlingar", "kettlingur"), 8u);
  EXPECT_EQ(common_prefix_bytes("skó", "skór"), std::string("skó").size());
  EXPECT_EQ(common_prefix_bytes("við", "ég"), 0u);
}

TEST(Utf8Test, Validation) {
  EXPECT_TRUE(is_valid("þetta er í lagi"));
  EXPECT_TRUE(is_valid(""));
  EXPECT_FALSE(is_valid("\xC3"));
  EXPECT_FALSE(is_valid("\xC0\xAF"));          // overlong
  EXPECT_FALSE(is_valid("\xED\xA0\x80"));      // surrogate
  EXPECT_FALSE(is_valid("\xF4\x90\x80\x80"));  // above U+10FFFF
  EXPECT_FALSE(is_valid("a\x80"));
}

TEST(Utf8Test, DecodeEncodeRoundTrip) {
  const std::string text = "Þórður á ýsu 🐟";
  EXPECT_EQ(encode(decode(text)), text);
  EXPECT_EQ(offsets("aæb"), (std::vector<size_t>{0, 1, 3, 4}));
  EXPECT_EQ(byte_offset("aæb", 2), 3u);
}

TEST(Utf8Test, Lowercasing) {
  EXPECT_EQ(lower_first("Ísland"), "ísland");
  EXPECT_EQ(lower_first("Þór"), "þór");
  EXPECT_EQ(lower_first("ÆGIR"), "æGIR");
  EXPECT_EQ(lower("ÐÖÆÞÁÉÝ"), "ðöæþáéý");
  EXPECT_EQ(lower("×"), "×");
  EXPECT_EQ(lower_first(""), "");
}

}  // namespace
}  // namespace nefnir::utf8

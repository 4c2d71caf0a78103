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

#include "nefnir/lexicon.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "nefnir/error.h"
#include "nefnir/utf8.h"

namespace nefnir {
namespace {

TEST(ParseEntryLineTest, PlainEntry) {
  const LexiconEntry e = parse_entry_line("kettlingar\tnkfn\tkettlingur");
  EXPECT_EQ(e.form, "kettlingar");
  EXPECT_EQ(e.tag, "nkfn");
  EXPECT_EQ(e.lemma, "kettlingur");
  EXPECT_TRUE(e.part_boundaries.empty());
  EXPECT_FALSE(e.is_compound());
}

TEST(ParseEntryLineTest, CompoundMarkersBecomeBoundaries) {
  const LexiconEntry e =
      parse_entry_line("fjall+göngu+skó\tt1\tfjallgönguskór");
  EXPECT_EQ(e.form, "fjallgönguskó");
  EXPECT_EQ(e.part_boundaries, (std::vector<size_t>{5, 10}));
  EXPECT_EQ(e.lemma, "fjallgönguskór");
  EXPECT_EQ(e.marked_form(), "fjall+göngu+skó");
}

TEST(ParseEntryLineTest, LengthsAreInCodePoints) {
  const LexiconEntry e = parse_entry_line("bækur\tnvfn\tbók");
  EXPECT_EQ(utf8::length(e.form), 5u);
  const LexiconEntry c = parse_entry_line("ö+ð\tx\töð");
  EXPECT_EQ(c.part_boundaries, (std::vector<size_t>{1}));
}

TEST(ParseEntryLineTest, RejectsMalformedLines) {
  EXPECT_THROW(parse_entry_line("kettlingar\tnkfn"), ParseError);
  EXPECT_THROW(parse_entry_line("kettlingar\tnkfn\tx\ty"), ParseError);
  EXPECT_THROW(parse_entry_line("\tnkfn\tkettlingur"), ParseError);
  EXPECT_THROW(parse_entry_line("kettlingar\t\tkettlingur"), ParseError);
  EXPECT_THROW(parse_entry_line("kettlingar\tnkfn\t"), ParseError);
  EXPECT_THROW(parse_entry_line("+skó\tt\tskór"), ParseError);
  EXPECT_THROW(parse_entry_line("skó+\tt\tskór"), ParseError);
  EXPECT_THROW(parse_entry_line("fjall++skó\tt\tskór"), ParseError);
  EXPECT_THROW(parse_entry_line("skó\tn kfn\tskór"), ParseError);
  EXPECT_THROW(parse_entry_line("skó\tt\tsk+ór"), ParseError);
  EXPECT_THROW(parse_entry_line("sk\xC3\tt\tskór"), ParseError);
}

TEST(ParseEntryLineTest, ErrorCarriesLineContent) {
  try {
    parse_entry_line("kettlingar\tnkfn");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), "kettlingar\tnkfn");
  }
}

TEST(ParseLexiconTest, EmptyStream) {
  std::istringstream in("");
  const TrainingSet set = parse_lexicon(in);
  EXPECT_TRUE(set.empty());
  EXPECT_TRUE(set.conflicts().empty());
}

TEST(ParseLexiconTest, IdenticalLinesAreDeduplicated) {
  std::istringstream in("hundar\tnkfn\thundur\nhundar\tnkfn\thundur\n");
  const TrainingSet set = parse_lexicon(in);
  EXPECT_EQ(set.size(), 1u);
  EXPECT_TRUE(set.conflicts().empty());
  EXPECT_EQ(set.duplicate_count(), 1u);
}

TEST(ParseLexiconTest, FirstLemmaWinsAndConflictIsRecorded) {
  std::istringstream in(
      "# comment\n"
      "\n"
      "læknum\tnkfþ\tlæknir\n"
      "læknum\tnkfþ\tlækur\n");
  const TrainingSet set = parse_lexicon(in);
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.entries()[0].lemma, "læknir");
  ASSERT_EQ(set.conflicts().size(), 1u);
  const DiscardedLine &record = set.conflicts()[0];
  EXPECT_EQ(record.reason, DiscardReason::kConflictingLemma);
  EXPECT_EQ(record.line_number, 4u);
  EXPECT_EQ(record.line, "læknum\tnkfþ\tlækur");
}

TEST(ParseLexiconTest, BadLinesAreRecordedNotFatal) {
  std::istringstream in("a\tb\tc\nbroken\nd\te\tf\n");
  const TrainingSet set = parse_lexicon(in);
  EXPECT_EQ(set.size(), 2u);
  ASSERT_EQ(set.conflicts().size(), 1u);
  EXPECT_EQ(set.conflicts()[0].reason, DiscardReason::kMalformed);
  EXPECT_EQ(set.conflicts()[0].line_number, 2u);
}

TEST(ParseLexiconTest, SameFormDifferentTagsAreDistinct) {
  std::istringstream in("hesta\tnkeo\thestur\nhesta\tnkfo\thestur\n");
  EXPECT_EQ(parse_lexicon(in).size(), 2u);
}

TEST(MergeUninflectedTest, LemmaEqualsForm) {
  std::istringstream in("og\tc\n");
  const TrainingSet set = merge_uninflected(TrainingSet(), in);
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.entries()[0], (LexiconEntry{"og", "c", "og", {}}));
}

TEST(MergeUninflectedTest, ExistingKeyWithOtherLemmaConflicts) {
  std::istringstream lexicon("við\taa\tviður\n");
  std::istringstream uninflected("við\taa\n");
  const TrainingSet set =
      merge_uninflected(parse_lexicon(lexicon), uninflected);
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.entries()[0].lemma, "viður");
  ASSERT_EQ(set.conflicts().size(), 1u);
  EXPECT_EQ(set.conflicts()[0].reason, DiscardReason::kConflictingLemma);
}

TEST(MergeUninflectedTest, EmptyStreamLeavesSetUnchanged) {
  std::istringstream lexicon("hundar\tnkfn\thundur\n");
  const TrainingSet before = parse_lexicon(lexicon);
  std::istringstream uninflected("");
  const TrainingSet after = merge_uninflected(before, uninflected);
  EXPECT_EQ(after.entries(), before.entries());
  EXPECT_EQ(after.conflicts().size(), before.conflicts().size());
}

TEST(MergeUninflectedTest, RejectsWrongColumnCount) {
  EXPECT_THROW(parse_uninflected_line("og\tc\tog"), ParseError);
  EXPECT_THROW(parse_uninflected_line("og"), ParseError);
}

// Removing markers and re-inserting them at the recorded boundaries gives
// back the original field.
TEST(LexiconPropertyTest, MarkerRoundTrip) {
  std::mt19937 rng(7);
  const std::vector<std::string> letters = {"a", "æ", "ö", "ð", "þ", "k"};
  std::uniform_int_distribution<size_t> letter(0, letters.size() - 1);
  std::uniform_int_distribution<int> parts(1, 4);
  std::uniform_int_distribution<int> part_length(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    std::string marked;
    for (int p = parts(rng); p > 0; --p) {
      if (!marked.empty()) marked += '+';
      for (int n = part_length(rng); n > 0; --n) marked += letters[letter(rng)];
    }
    const LexiconEntry e = parse_entry_line(marked + "\tt\tx");
    EXPECT_EQ(e.marked_form(), marked);
    EXPECT_EQ(e.form.find('+'), std::string::npos);
    for (size_t i = 0; i < e.part_boundaries.size(); ++i) {
      EXPECT_GT(e.part_boundaries[i], 0u);
      EXPECT_LT(e.part_boundaries[i], utf8::length(e.form));
      if (i > 0) {
        EXPECT_GT(e.part_boundaries[i], e.part_boundaries[i - 1]);
      }
    }
  }
}

// entries + conflicting lemmas + silent duplicates = valid lines.
TEST(LexiconPropertyTest, EveryValidLineIsAccountedFor) {
  std::mt19937 rng(11);
  const std::vector<std::string> forms = {"a", "b", "æ", "ð"};
  const std::vector<std::string> tags = {"t1", "t2"};
  const std::vector<std::string> lemmas = {"x", "y"};
  for (int trial = 0; trial < 100; ++trial) {
    std::ostringstream text;
    size_t valid = 0;
    size_t malformed = 0;
    for (int line = 0; line < 30; ++line) {
      if (rng() % 7 == 0) {
        text << "broken line\n";
        ++malformed;
        continue;
      }
      text << forms[rng() % forms.size()] << '\t' << tags[rng() % 2] << '\t'
           << lemmas[rng() % 2] << '\n';
      ++valid;
    }
    std::istringstream in(text.str());
    const TrainingSet set = parse_lexicon(in);
    EXPECT_EQ(set.size() +
                  set.conflict_count(DiscardReason::kConflictingLemma) +
                  set.duplicate_count(),
              valid);
    EXPECT_EQ(set.conflict_count(DiscardReason::kMalformed), malformed);
  }
}

}  // namespace
}  // namespace nefnir

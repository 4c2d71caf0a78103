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

#include "nefnir/model_io.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "nefnir/error.h"
#include "nefnir/trainer.h"
#include "support/synthetic_lexicon.h"

namespace nefnir {
namespace {

Model load(const std::string &text) {
  std::istringstream in(text);
  return load_model(in);
}

TEST(ModelIoTest, EmptyModel) {
  EXPECT_EQ(serialize_model(Model()),
            "nefnir-model 1\ntagmap -\n[exceptions]\n[rules]\n");
  EXPECT_EQ(load(serialize_model(Model())), Model());
}

TEST(ModelIoTest, TwoEntryModelHasOneRuleLine) {
  TrainingSet set;
  set.add({"kettlingar", "nkfn", "kettlingur", {}});
  set.add({"hundar", "nkfn", "hundur", {}});
  EXPECT_EQ(serialize_model(train(set)),
            "nefnir-model 1\ntagmap -\n[exceptions]\n[rules]\n"
            "ar\tnkfn\tar\tur\n");
}

TEST(ModelIoTest, SortOrder) {
  Model model;
  model.tagmap_hash = "00ff00ff00ff00ff";
  model.rules.add({"ba", "t", {"", "x"}});
  model.rules.add({"", "t", {"", ""}});
  model.rules.add({"ab", "t", {"b", ""}});
  model.rules.add({"a", "s", {"a", "u"}});
  model.exceptions.add("við", "fp1fn", "ég");
  model.exceptions.add("mér", "fp1ef", "ég");
  model.exceptions.add("mér", "fp1eþ", "ég");
  EXPECT_EQ(serialize_model(model),
            "nefnir-model 1\n"
            "tagmap 00ff00ff00ff00ff\n"
            "[exceptions]\n"
            "mér\tfp1ef\tég\n"
            "mér\tfp1eþ\tég\n"
            "við\tfp1fn\tég\n"
            "[rules]\n"
            "a\ts\ta\tu\n"
            "\\0\tt\t\\0\t\\0\n"
            "ba\tt\t\\0\tx\n"
            "ab\tt\tb\t\\0\n");
}

TEST(ModelIoTest, Escaping) {
  EXPECT_EQ(escape_field(""), "\\0");
  EXPECT_EQ(escape_field("a\tb\nc\\d"), "a\\tb\\nc\\\\d");
  EXPECT_EQ(escape_field("\\0"), "\\\\0");
  for (const std::string text : {"", "\\0", "a\tb", "\\", "x\\ny", "\r"}) {
    EXPECT_EQ(unescape_field(escape_field(text)), text);
  }
  EXPECT_THROW(unescape_field("a\\"), ModelFormatError);
  EXPECT_THROW(unescape_field("a\\q"), ModelFormatError);
  EXPECT_THROW(unescape_field(""), ModelFormatError);
}

TEST(ModelIoTest, ExoticFieldsRoundTrip) {
  Model model;
  model.rules.add({"a\\b", "t", {"\\b", "\t"}});
  model.exceptions.add("x y", "t", "\\0");
  EXPECT_EQ(load(serialize_model(model)), model);
}

TEST(ModelIoTest, LoadErrors) {
  const std::string header = "nefnir-model 1\ntagmap -\n";
  EXPECT_THROW(load(""), ModelFormatError);
  EXPECT_THROW(load("nefnir-model 2\ntagmap -\n[exceptions]\n[rules]\n"),
               ModelFormatError);
  EXPECT_THROW(load("something else\n"), ModelFormatError);
  EXPECT_THROW(load("nefnir-model 1\n"), ModelFormatError);
  EXPECT_THROW(load(header), ModelFormatError);
  EXPECT_THROW(load(header + "[exceptions]\n"), ModelFormatError);
  EXPECT_THROW(load(header + "[exceptions]\nvið\tfp1fn\tég\n"),
               ModelFormatError);
  EXPECT_THROW(load(header + "[exceptions]\nvið\tfp1fn\n[rules]\n"),
               ModelFormatError);
  EXPECT_THROW(load(header + "[exceptions]\n[rules]\nar\tnkfn\tar\n"),
               ModelFormatError);
  EXPECT_THROW(load(header + "[exceptions]\n[rules]\nar\tnkfn\tbar\tur\n"),
               ModelFormatError);
}

TEST(ModelIoTest, DuplicateKeysNameTheLine) {
  const std::string text =
      "nefnir-model 1\ntagmap -\n[exceptions]\n[rules]\n"
      "ar\tnkfn\tar\tur\n"
      "ar\tnkfn\tr\tx\n";
  try {
    load(text);
    FAIL();
  } catch (const ModelFormatError &e) {
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(load("nefnir-model 1\ntagmap -\n[exceptions]\n"
                    "a\tt\tb\na\tt\tc\n[rules]\n"),
               ModelFormatError);
}

TEST(ModelIoPropertyTest, RoundTripAndDeterminism) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    testing::ParadigmOptions options;
    options.target_entries = 300;
    const Model model =
        train(testing::generate_paradigm_lexicon(seed, options));
    const std::string text = serialize_model(model);
    EXPECT_EQ(serialize_model(model), text);
    const Model loaded = load(text);
    EXPECT_EQ(loaded, model);
    EXPECT_EQ(serialize_model(loaded), text);
  }
}

}  // namespace
}  // namespace nefnir

// Copyright 2026 The Casesum Authors.
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

#include "casesum/noun_tagger.h"

#include <gtest/gtest.h>

namespace casesum {
namespace {

using Nouns = std::set<std::string>;

TEST(TagNounsTest, CommonNounsAndVerbs) {
  EXPECT_EQ(TagNouns("The court dismissed the appeal"), (Nouns{"court", "appeal"}));
  EXPECT_EQ(TagNouns(""), Nouns{});
}

TEST(TagNounsTest, ProperNouns) {
  EXPECT_EQ(TagNouns("Nationwide News appealed"), (Nouns{"nationwide", "news"}));
  // Capitalized mid-sentence wins over the exclusion lexicon.
  EXPECT_EQ(TagNouns("appeal to the High Court"), (Nouns{"appeal", "high", "court"}));
}

TEST(TagNounsTest, SuffixRules) {
  EXPECT_EQ(TagNouns("publication of false imputations"),
            (Nouns{"publication", "imputations"}));
  EXPECT_EQ(TagNouns("the proceedings were quickly heard"), (Nouns{"proceedings", "heard"}));
  EXPECT_EQ(TagNouns("a hearing was refusing"), (Nouns{"hearing"}));
}

TEST(TagNounsTest, NumbersAndSingleLettersExcluded) {
  EXPECT_EQ(TagNouns("section 5 of s 2019"), (Nouns{"section"}));
}

TEST(TagNounsTest, ExclusionLexicon) {
  EXPECT_EQ(TagNouns("it found that the evidence was relevant"), (Nouns{"evidence"}));
}

TEST(TagNounsTest, CustomLexicon) {
  WordList stop = WordList::Parse("the\n");
  WordList excl = WordList::Parse("court\n");
  EXPECT_EQ(TagNouns("the court and appeal", stop, excl), (Nouns{"and", "appeal"}));
}

}  // namespace
}  // namespace casesum

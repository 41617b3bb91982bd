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

#ifndef CASESUM_NOUN_TAGGER_H_
#define CASESUM_NOUN_TAGGER_H_

#include <set>
#include <string>
#include <string_view>

#include "casesum/word_list.h"

namespace casesum {

// Rule-based noun detector standing in for a statistical POS tagger. Each
// token is checked in order:
//   1. stopword, pure number, or single character  -> not a noun
//   2. capitalized and not sentence-initial          -> proper noun
//   3. in the exclusion lexicon                      -> not a noun
//   4. noun suffix (-tion, -sion, -ment, -ness, -ity, -er, -or, -ism, -ance,
//      -ence, -ship), or a plural -s over such a stem or an -ing form -> noun
//   5. -ing directly after a determiner              -> noun
//   6. verb/adjective/adverb suffix (-ed, -ing, -ly, -ize, -ful, -ous, -ive,
//      -able, -ible)                                 -> not a noun
//   7. anything else                                 -> noun
// Returns lowercased surface forms.
std::set<std::string> TagNouns(std::string_view text, const WordList &stopwords,
                               const WordList &exclusions);

// Tags with the built-in word lists.
std::set<std::string> TagNouns(std::string_view text);

}  // namespace casesum

#endif  // CASESUM_NOUN_TAGGER_H_

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

#ifndef CASESUM_PREPROCESS_H_
#define CASESUM_PREPROCESS_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "casesum/word_list.h"

namespace casesum {

struct RawInput {
  std::string text;   // full case file, UTF-8
  std::string title;  // case title, may be empty
};

struct Sentence {
  size_t position = 0;
  std::string raw;
  // Lowercased, stopword-free, stemmed content tokens in text order.
  std::vector<std::string> tokens;
  // Lowercased unstemmed noun surface forms.
  std::set<std::string> nouns;

  bool operator==(const Sentence &) const = default;
};

struct Document {
  std::set<std::string> title_nouns;
  std::vector<Sentence> sentences;

  bool operator==(const Document &) const = default;
};

// Text cleanup applied before sentence splitting:
//  - control characters other than '\n' and '\t' (and U+00A0) become spaces
//  - runs of two or more periods collapse to one
//  - dotted acronyms of single letters merge ("F.C.A" -> "FCA", "U.S.A." ->
//    "USA"); the trailing period of the acronym is consumed
//  - whitespace runs containing two or more newlines become a paragraph
//    break "\n\n", all other runs a single space; leading and trailing
//    whitespace is dropped
// Idempotent.
std::string NormalizeText(std::string_view raw);

// Splits normalized text into trimmed, non-empty sentences in document order.
// The vector index is the sentence position. A split happens at a paragraph
// break, or after '.', '!' or '?' (plus any closing quotes or parentheses)
// when followed by whitespace and then a letter or digit (optionally behind
// an opening quote or parenthesis), or by the end of text. Periods after abbreviations
// in kSentenceExceptions, after single letters, after a leading enumeration
// number, and inside square brackets never split.
// Throws Error(kEmptyDocument) when no sentence survives.
std::vector<std::string> SplitSentences(std::string_view normalized);

// Abbreviations (lowercase, with trailing period) that never end a sentence.
extern const std::vector<std::string_view> kSentenceExceptions;

// Maximal runs of ASCII alphanumerics with word-internal hyphens and
// apostrophes (U+2019 counts as an apostrophe). TokenizeSurface keeps the
// original case; Tokenize lowercases.
std::vector<std::string> TokenizeSurface(std::string_view text);
std::vector<std::string> Tokenize(std::string_view text);

std::vector<std::string> RemoveStopwords(const std::vector<std::string> &tokens,
                                         const WordList &stopwords = DefaultStopwords());

// First non-empty line of text with surrounding whitespace removed.
std::string DefaultTitle(std::string_view text);

class Preprocessor {
 public:
  // Uses the built-in stopword list and noun exclusion lexicon.
  Preprocessor();
  Preprocessor(WordList stopwords, WordList noun_exclusions);

  Document Process(const RawInput &input) const;

  std::set<std::string> TagNouns(std::string_view text) const;

  const WordList &stopwords() const { return stopwords_; }
  const WordList &noun_exclusions() const { return noun_exclusions_; }

 private:
  WordList stopwords_;
  WordList noun_exclusions_;
};

// Convenience wrapper around a default Preprocessor.
Document PreprocessDocument(const RawInput &input);

}  // namespace casesum

#endif  // CASESUM_PREPROCESS_H_

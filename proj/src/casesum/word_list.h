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

#ifndef CASESUM_WORD_LIST_H_
#define CASESUM_WORD_LIST_H_

#include <set>
#include <string>
#include <string_view>

namespace casesum {

// A set of lowercase tokens loaded from the one-token-per-line format:
// UTF-8, blank lines ignored, '#' starts a comment that runs to end of line.
class WordList {
 public:
  WordList() = default;

  static WordList Parse(std::string_view text);

  // Throws Error(kIoError) if the file cannot be read.
  static WordList Load(const std::string &path);

  bool Contains(std::string_view word) const {
    return words_.find(word) != words_.end();
  }
  size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>> &words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

// Built-in English stopword list (data/stopwords.txt).
const WordList &DefaultStopwords();

// Built-in noun tagger exclusion lexicon (data/noun_exclusions.txt).
const WordList &DefaultNounExclusions();

}  // namespace casesum

#endif  // CASESUM_WORD_LIST_H_

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

#include <array>
#include <vector>

#include "casesum/preprocess.h"

namespace casesum {
namespace {

constexpr std::array<std::string_view, 11> kNounSuffixes = {
    "tion", "sion", "ment", "ness", "ity", "er", "or", "ism", "ance", "ence", "ship",
};

constexpr std::array<std::string_view, 9> kNonNounSuffixes = {
    "ed", "ing", "ly", "ize", "ful", "ous", "ive", "able", "ible",
};

constexpr std::array<std::string_view, 17> kDeterminers = {
    "the", "a", "an", "this", "that", "these", "those", "his", "her", "its",
    "their", "our", "my", "your", "any", "each", "every",
};

bool HasSuffix(std::string_view word, std::string_view suffix) {
  // Require at least two characters of stem in front of the suffix.
  return word.size() >= suffix.size() + 2 && word.ends_with(suffix);
}

template <size_t N>
bool HasAnySuffix(std::string_view word, const std::array<std::string_view, N> &suffixes) {
  for (std::string_view s : suffixes) {
    if (HasSuffix(word, s)) return true;
  }
  return false;
}

bool IsDeterminer(std::string_view word) {
  for (std::string_view d : kDeterminers) {
    if (word == d) return true;
  }
  return false;
}

bool IsNumeric(std::string_view word) {
  for (char c : word) {
    if ((c < '0' || c > '9') && c != '-' && c != '\'') return false;
  }
  return true;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// The part of a token that carries its morphology: last hyphen segment with
// any possessive removed.
std::string_view MorphologicalBase(std::string_view word) {
  size_t hyphen = word.rfind('-');
  if (hyphen != std::string_view::npos) word = word.substr(hyphen + 1);
  if (word.ends_with("'s")) {
    word.remove_suffix(2);
  } else if (word.ends_with('\'')) {
    word.remove_suffix(1);
  }
  return word;
}

bool IsPluralOfNounStem(std::string_view base) {
  if (base.size() < 4 || !base.ends_with('s') || base.ends_with("ss")) return false;
  std::string_view stem = base.substr(0, base.size() - 1);
  return HasAnySuffix(stem, kNounSuffixes) || HasSuffix(stem, "ing");
}

}  // namespace

std::set<std::string> TagNouns(std::string_view text, const WordList &stopwords,
                               const WordList &exclusions) {
  std::set<std::string> nouns;
  std::vector<std::string> surface = TokenizeSurface(text);
  std::string previous;
  for (size_t i = 0; i < surface.size(); ++i) {
    const std::string &token = surface[i];
    std::string lower = Lower(token);
    bool noun = true;
    std::string_view base = MorphologicalBase(lower);
    bool capitalized = token[0] >= 'A' && token[0] <= 'Z';

    if (stopwords.Contains(lower) || IsNumeric(lower) || lower.size() < 2) {
      noun = false;
    } else if (capitalized && i > 0) {
      noun = true;
    } else if (exclusions.Contains(lower) || exclusions.Contains(base)) {
      noun = false;
    } else if (HasAnySuffix(base, kNounSuffixes) || IsPluralOfNounStem(base)) {
      noun = true;
    } else if (HasSuffix(base, "ing") && IsDeterminer(previous)) {
      noun = true;
    } else if (HasAnySuffix(base, kNonNounSuffixes)) {
      noun = false;
    }
    if (noun) nouns.insert(lower);
    previous = std::move(lower);
  }
  return nouns;
}

std::set<std::string> TagNouns(std::string_view text) {
  return TagNouns(text, DefaultStopwords(), DefaultNounExclusions());
}

}  // namespace casesum

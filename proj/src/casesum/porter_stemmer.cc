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

#include "casesum/porter_stemmer.h"

#include <array>

namespace casesum {
namespace {

// Working buffer for one word. end_ is one past the last live character;
// stem_end_ marks the end of the stem when a suffix has been matched.
class PorterWord {
 public:
  explicit PorterWord(std::string_view word) : b_(word), end_(b_.size()) {}

  std::string Result() const { return b_.substr(0, end_); }

  void Step1a();
  void Step1b();
  void Step1c();
  void Step2();
  void Step3();
  void Step4();
  void Step5a();
  void Step5b();

 private:
  bool IsConsonant(size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 || !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, len).
  int Measure(size_t len) const {
    int m = 0;
    size_t i = 0;
    while (i < len && IsConsonant(i)) ++i;
    while (i < len) {
      while (i < len && !IsConsonant(i)) ++i;
      if (i >= len) break;
      while (i < len && IsConsonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool ContainsVowel(size_t len) const {
    for (size_t i = 0; i < len; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool EndsWithDoubleConsonant(size_t len) const {
    return len >= 2 && b_[len - 1] == b_[len - 2] && IsConsonant(len - 1);
  }

  // consonant-vowel-consonant where the final consonant is not w, x or y.
  bool EndsCvc(size_t len) const {
    if (len < 3) return false;
    if (!IsConsonant(len - 3) || IsConsonant(len - 2) || !IsConsonant(len - 1)) {
      return false;
    }
    char c = b_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool EndsWith(std::string_view suffix) const {
    return end_ >= suffix.size() &&
           std::string_view(b_).substr(end_ - suffix.size(), suffix.size()) == suffix;
  }

  void ReplaceSuffix(size_t suffix_len, std::string_view replacement) {
    b_.replace(end_ - suffix_len, suffix_len, replacement);
    end_ = end_ - suffix_len + replacement.size();
    b_.resize(end_);
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  // Finds the longest matching suffix among rules (ordered longest-first where
  // suffixes overlap) and replaces it when the stem measure exceeds min_measure.
  template <size_t N>
  void ApplyMeasureRules(const std::array<Rule, N> &rules, int min_measure) {
    for (const Rule &rule : rules) {
      if (!EndsWith(rule.suffix)) continue;
      if (Measure(end_ - rule.suffix.size()) > min_measure) {
        ReplaceSuffix(rule.suffix.size(), rule.replacement);
      }
      return;
    }
  }

  std::string b_;
  size_t end_;
};

void PorterWord::Step1a() {
  if (EndsWith("sses")) {
    ReplaceSuffix(4, "ss");
  } else if (EndsWith("ies")) {
    ReplaceSuffix(3, "i");
  } else if (EndsWith("ss")) {
    // unchanged
  } else if (EndsWith("s")) {
    ReplaceSuffix(1, "");
  }
}

void PorterWord::Step1b() {
  if (EndsWith("eed")) {
    if (Measure(end_ - 3) > 0) ReplaceSuffix(3, "ee");
    return;
  }
  size_t suffix_len = 0;
  if (EndsWith("ed")) {
    suffix_len = 2;
  } else if (EndsWith("ing")) {
    suffix_len = 3;
  } else {
    return;
  }
  if (!ContainsVowel(end_ - suffix_len)) return;
  ReplaceSuffix(suffix_len, "");

  if (EndsWith("at")) {
    ReplaceSuffix(2, "ate");
  } else if (EndsWith("bl")) {
    ReplaceSuffix(2, "ble");
  } else if (EndsWith("iz")) {
    ReplaceSuffix(2, "ize");
  } else if (EndsWithDoubleConsonant(end_)) {
    char last = b_[end_ - 1];
    if (last != 'l' && last != 's' && last != 'z') ReplaceSuffix(1, "");
  } else if (Measure(end_) == 1 && EndsCvc(end_)) {
    ReplaceSuffix(0, "e");
  }
}

void PorterWord::Step1c() {
  if (EndsWith("y") && ContainsVowel(end_ - 1)) ReplaceSuffix(1, "i");
}

void PorterWord::Step2() {
  static constexpr std::array<Rule, 20> kRules = {{
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
      {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
      {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
      {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
      {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
      {"iviti", "ive"},   {"biliti", "ble"},
  }};
  ApplyMeasureRules(kRules, 0);
}

void PorterWord::Step3() {
  static constexpr std::array<Rule, 7> kRules = {{
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""},
  }};
  ApplyMeasureRules(kRules, 0);
}

void PorterWord::Step4() {
  static constexpr std::array<std::string_view, 19> kSuffixes = {
      "al",  "ance", "ence", "er",  "ic",  "able", "ible",
      "ant", "ement", "ment", "ent", "ion", "ou",  "ism",
      "ate", "iti",  "ous",  "ive", "ize",
  };
  for (std::string_view suffix : kSuffixes) {
    if (!EndsWith(suffix)) continue;
    size_t stem_len = end_ - suffix.size();
    if (Measure(stem_len) <= 1) return;
    if (suffix == "ion") {
      if (stem_len == 0) return;
      char c = b_[stem_len - 1];
      if (c != 's' && c != 't') return;
    }
    ReplaceSuffix(suffix.size(), "");
    return;
  }
}

void PorterWord::Step5a() {
  if (!EndsWith("e")) return;
  int m = Measure(end_ - 1);
  if (m > 1 || (m == 1 && !EndsCvc(end_ - 1))) ReplaceSuffix(1, "");
}

void PorterWord::Step5b() {
  if (Measure(end_) > 1 && EndsWithDoubleConsonant(end_) && b_[end_ - 1] == 'l') {
    ReplaceSuffix(1, "");
  }
}

bool IsLowerAlpha(std::string_view s) {
  for (char c : s) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

}  // namespace

std::string PorterStem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  PorterWord w(word);
  w.Step1a();
  w.Step1b();
  w.Step1c();
  w.Step2();
  w.Step3();
  w.Step4();
  w.Step5a();
  w.Step5b();
  return w.Result();
}

std::string Stem(std::string_view token) {
  std::string_view base = token;
  if (base.size() > 2 && base.ends_with("'s")) {
    base.remove_suffix(2);
  } else if (base.size() > 1 && base.ends_with('\'')) {
    base.remove_suffix(1);
  }
  if (base.empty() || !IsLowerAlpha(base)) return std::string(base.empty() ? token : base);
  return PorterStem(base);
}

}  // namespace casesum

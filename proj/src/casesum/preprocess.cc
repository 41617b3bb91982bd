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

#include "casesum/preprocess.h"

#include "casesum/noun_tagger.h"
#include "casesum/porter_stemmer.h"
#include "casesum/status.h"

namespace casesum {

const std::vector<std::string_view> kSentenceExceptions = {
    "v.",    "vs.",   "no.",   "nos.", "pty.", "ltd.", "co.",   "inc.",
    "mr.",   "mrs.",  "ms.",   "dr.",  "s.",   "ss.",  "p.",    "pp.",
    "cf.",   "e.g.",  "i.e.",  "j.",   "jj.",  "cj.",  "art.",  "para.",
    "paras.", "vol.", "ch.",   "sch.", "reg.", "regs.", "cl.",  "r.",
    "sec.",  "st.",   "hon.",  "prof.", "esq.", "corp.", "dept.", "fig.",
};

namespace {

bool IsAsciiAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAsciiAlnum(char c) { return IsAsciiAlpha(c) || IsAsciiDigit(c); }
bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n'; }

char ToLower(char c) { return IsUpper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

std::string ReplaceControlCharacters(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    auto c = static_cast<unsigned char>(raw[i]);
    if (c == 0xC2 && i + 1 < raw.size() && static_cast<unsigned char>(raw[i + 1]) == 0xA0) {
      out.push_back(' ');
      ++i;
    } else if ((c < 0x20 && c != '\n' && c != '\t') || c == 0x7F) {
      out.push_back(' ');
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::string CollapsePeriodRuns(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '.' && !out.empty() && out.back() == '.') continue;
    out.push_back(c);
  }
  return out;
}

// Matches L1 '.' L2 '.' ... Ln ['.'] at i where every L is a single ASCII
// letter, n >= 2, and the run is delimited by non-alphanumerics. Returns the
// match length, or 0.
size_t MatchAcronym(std::string_view text, size_t i, std::string *letters) {
  if (i > 0 && IsAsciiAlnum(text[i - 1])) return 0;
  letters->clear();
  size_t j = i;
  size_t best = 0;
  std::string best_letters;
  while (j < text.size() && IsAsciiAlpha(text[j])) {
    bool single = j + 1 == text.size() || !IsAsciiAlnum(text[j + 1]);
    if (!single) break;
    letters->push_back(text[j]);
    size_t after = j + 1;
    bool dotted = after < text.size() && text[after] == '.';
    if (letters->size() >= 2) {
      // Candidate ending here, with the trailing period consumed if the
      // character after it is not alphanumeric.
      size_t end = after;
      if (dotted && (after + 1 == text.size() || !IsAsciiAlnum(text[after + 1]))) end = after + 1;
      best = end - i;
      best_letters = *letters;
    }
    if (!dotted) break;
    j = after + 1;
  }
  *letters = best_letters;
  return best;
}

std::string MergeAcronyms(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::string letters;
  size_t i = 0;
  while (i < text.size()) {
    if (IsAsciiAlpha(text[i])) {
      size_t len = MatchAcronym(text, i, &letters);
      if (len > 0) {
        out += letters;
        i += len;
        continue;
      }
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (!IsSpace(text[i])) {
      out.push_back(text[i++]);
      continue;
    }
    int newlines = 0;
    while (i < text.size() && IsSpace(text[i])) {
      if (text[i] == '\n') ++newlines;
      ++i;
    }
    if (out.empty() || i == text.size()) continue;
    out += newlines >= 2 ? "\n\n" : " ";
  }
  return out;
}

bool IsClosingPunctuation(char c) { return c == '"' || c == '\'' || c == ')'; }
bool IsOpeningPunctuation(char c) { return c == '"' || c == '\'' || c == '('; }

// Start of the whitespace-delimited word that ends at `end`.
size_t WordStart(std::string_view text, size_t end, size_t sentence_start) {
  size_t begin = end;
  while (begin > sentence_start && !IsSpace(text[begin - 1])) --begin;
  return begin;
}

// Lowercased text[begin, end] with leading opening punctuation removed.
std::string LowerWord(std::string_view text, size_t begin, size_t end) {
  while (begin < end && (IsOpeningPunctuation(text[begin]) || text[begin] == '[')) ++begin;
  std::string word;
  for (size_t i = begin; i <= end; ++i) word.push_back(ToLower(text[i]));
  return word;
}

bool IsException(std::string_view word) {
  for (std::string_view e : kSentenceExceptions) {
    if (word == e) return true;
  }
  // Initials such as "J." or "s.".
  return word.size() == 2 && IsAsciiAlpha(word[0]);
}

bool IsEnumeration(std::string_view word, bool first_word) {
  if (!first_word || word.size() < 2) return false;
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    if (!IsAsciiDigit(word[i])) return false;
  }
  return true;
}

void AppendTrimmed(std::string_view text, size_t begin, size_t end,
                   std::vector<std::string> *out) {
  while (begin < end && IsSpace(text[begin])) ++begin;
  while (end > begin && IsSpace(text[end - 1])) --end;
  if (end > begin) out->emplace_back(text.substr(begin, end - begin));
}

bool IsWordChar(unsigned char c) { return IsAsciiAlnum(static_cast<char>(c)); }

}  // namespace

std::string NormalizeText(std::string_view raw) {
  std::string text = ReplaceControlCharacters(raw);
  text = CollapsePeriodRuns(text);
  text = MergeAcronyms(text);
  return CollapseWhitespace(text);
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> sentences;
  size_t start = 0;
  int bracket_depth = 0;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n' && i + 1 < text.size() && text[i + 1] == '\n') {
      AppendTrimmed(text, start, i, &sentences);
      start = i + 2;
      i += 2;
      bracket_depth = 0;
      continue;
    }
    if (c == '[') {
      ++bracket_depth;
    } else if (c == ']') {
      if (bracket_depth > 0) --bracket_depth;
    } else if ((c == '.' || c == '!' || c == '?') && bracket_depth == 0) {
      size_t j = i + 1;
      while (j < text.size() && IsClosingPunctuation(text[j])) ++j;
      bool boundary = false;
      if (j == text.size()) {
        boundary = true;
      } else if (IsSpace(text[j])) {
        size_t k = j;
        while (k < text.size() && IsSpace(text[k])) ++k;
        if (k == text.size()) {
          boundary = true;
        } else {
          char next = text[k];
          boundary = IsAsciiAlnum(next) ||
                     (IsOpeningPunctuation(next) && k + 1 < text.size() &&
                      IsAsciiAlnum(text[k + 1]));
        }
      }
      if (boundary && c == '.') {
        size_t first = start;
        while (first < i && IsSpace(text[first])) ++first;
        size_t word_begin = WordStart(text, i, first);
        std::string word = LowerWord(text, word_begin, i);
        bool first_word = word_begin == first;
        if (IsException(word) || IsEnumeration(word, first_word)) boundary = false;
      }
      if (boundary) {
        AppendTrimmed(text, start, j, &sentences);
        start = j;
        i = j;
        continue;
      }
    }
    ++i;
  }
  AppendTrimmed(text, start, text.size(), &sentences);
  if (sentences.empty()) throw Error(ErrorCode::kEmptyDocument, "no sentences in input");
  return sentences;
}

std::vector<std::string> TokenizeSurface(std::string_view text) {
  // Map U+2019 to an ASCII apostrophe so it can act as a word-internal joiner.
  std::string buffer;
  buffer.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x80\x99") {
      buffer.push_back('\'');
      i += 2;
    } else {
      buffer.push_back(text[i]);
    }
  }

  std::vector<std::string> tokens;
  std::string current;
  auto n = buffer.size();
  for (size_t i = 0; i < n; ++i) {
    auto c = static_cast<unsigned char>(buffer[i]);
    if (IsWordChar(c)) {
      current.push_back(static_cast<char>(c));
    } else if ((c == '-' || c == '\'') && !current.empty() && i + 1 < n &&
               IsWordChar(static_cast<unsigned char>(buffer[i + 1]))) {
      current.push_back(static_cast<char>(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens = TokenizeSurface(text);
  for (std::string &t : tokens) {
    for (char &c : t) c = ToLower(c);
  }
  return tokens;
}

std::vector<std::string> RemoveStopwords(const std::vector<std::string> &tokens,
                                         const WordList &stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string &t : tokens) {
    if (!stopwords.Contains(t)) out.push_back(t);
  }
  return out;
}

std::string DefaultTitle(std::string_view text) {
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin != std::string_view::npos) {
      size_t end = line.find_last_not_of(" \t\r");
      return std::string(line.substr(begin, end - begin + 1));
    }
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return {};
}

Preprocessor::Preprocessor()
    : stopwords_(DefaultStopwords()), noun_exclusions_(DefaultNounExclusions()) {}

Preprocessor::Preprocessor(WordList stopwords, WordList noun_exclusions)
    : stopwords_(std::move(stopwords)), noun_exclusions_(std::move(noun_exclusions)) {}

std::set<std::string> Preprocessor::TagNouns(std::string_view text) const {
  return casesum::TagNouns(text, stopwords_, noun_exclusions_);
}

Document Preprocessor::Process(const RawInput &input) const {
  Document doc;
  doc.title_nouns = TagNouns(NormalizeText(input.title));
  std::vector<std::string> raw_sentences = SplitSentences(NormalizeText(input.text));
  doc.sentences.reserve(raw_sentences.size());
  for (size_t i = 0; i < raw_sentences.size(); ++i) {
    Sentence s;
    s.position = i;
    s.raw = std::move(raw_sentences[i]);
    for (const std::string &token : RemoveStopwords(Tokenize(s.raw), stopwords_)) {
      std::string stem = Stem(token);
      // A stem can collide with a stopword ("ons" -> "on").
      if (!stopwords_.Contains(stem)) s.tokens.push_back(std::move(stem));
    }
    s.nouns = TagNouns(s.raw);
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

Document PreprocessDocument(const RawInput &input) {
  static const Preprocessor preprocessor;
  return preprocessor.Process(input);
}

}  // namespace casesum

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

#include "casesum/word_list.h"

#include <fstream>
#include <sstream>

#include "casesum/status.h"

namespace casesum {
namespace internal {
extern const char kEmbeddedStopwords[];
extern const char kEmbeddedNounExclusions[];
}  // namespace internal

namespace {

std::string_view Trim(std::string_view s) {
  const char *ws = " \t\r\n";
  size_t begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  size_t end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

}  // namespace

WordList WordList::Parse(std::string_view text) {
  WordList list;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    std::string word(line);
    for (char &c : word) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    list.words_.insert(std::move(word));
  }
  return list;
}

WordList WordList::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read word list " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

const WordList &DefaultStopwords() {
  static const WordList list = WordList::Parse(internal::kEmbeddedStopwords);
  return list;
}

const WordList &DefaultNounExclusions() {
  static const WordList list = WordList::Parse(internal::kEmbeddedNounExclusions);
  return list;
}

}  // namespace casesum

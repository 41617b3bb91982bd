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

#ifndef CASESUM_PORTER_STEMMER_H_
#define CASESUM_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace casesum {

// Porter (1980) suffix-stripping stemmer, original rule set. Input must be a
// lowercase ASCII word; words of length <= 2 are returned unchanged.
std::string PorterStem(std::string_view word);

// Token-level stemming used by the preprocessing pipeline. Strips a trailing
// possessive ("'s" or "'") and applies PorterStem when the remainder is purely
// alphabetic; other tokens (numbers, hyphenated forms) pass through. Never
// returns an empty string for a non-empty token.
std::string Stem(std::string_view token);

}  // namespace casesum

#endif  // CASESUM_PORTER_STEMMER_H_

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

#ifndef CASESUM_VECTORIZE_H_
#define CASESUM_VECTORIZE_H_

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "casesum/preprocess.h"

namespace casesum {

using TermId = uint32_t;

struct SparseEntry {
  TermId term;
  double weight;

  bool operator==(const SparseEntry &) const = default;
};

// Entries sorted by strictly increasing term id, all weights > 0.
using SparseVector = std::vector<SparseEntry>;

double VectorNorm(const SparseVector &v);

// Term dictionary with sentence frequencies. Ids are dense and assigned in
// order of first appearance.
class Vocabulary {
 public:
  size_t size() const { return terms_.size(); }
  std::optional<TermId> Find(std::string_view term) const;
  const std::string &term(TermId id) const { return terms_[id]; }
  uint32_t df(TermId id) const { return df_[id]; }

  // Returns the id of term, adding it with df 0 if absent.
  TermId Intern(std::string_view term);
  void IncrementDf(TermId id) { ++df_[id]; }

  bool operator==(const Vocabulary &) const = default;

 private:
  std::map<std::string, TermId, std::less<>> ids_;
  std::vector<std::string> terms_;
  std::vector<uint32_t> df_;
};

// Stored weights always use the natural logarithm. A different base scales
// every weight by the same constant, which leaves clustering and sentence
// scores unchanged in exact arithmetic; keeping one representation makes
// them unchanged in floating point too. The base applies only when weights
// are reported.
struct TfIdfModel {
  Vocabulary vocabulary;
  size_t n_sentences = 0;
  std::vector<SparseVector> vectors;  // indexed by sentence position
  double total_weight = 0;            // sum of every stored weight
  double log_base = std::numbers::e;

  size_t dimension() const { return vocabulary.size(); }

  // A stored weight expressed in log_base.
  double InBase(double weight) const {
    return log_base == std::numbers::e ? weight : weight / std::log(log_base);
  }

  bool operator==(const TfIdfModel &) const = default;
};

// Builds tf-idf weights treating each sentence as a document:
//   w(i, j) = count(i in j) * ln(N / df(i))
// with N the number of sentences. log_base is recorded for reporting.
// Zero-weight terms (df == N) are kept in the vocabulary but not stored.
// Throws Error(kEmptyDocument) for zero sentences and kInvalidArgument for
// a log base that is not positive or equals 1.
TfIdfModel BuildModel(std::span<const std::vector<std::string>> sentence_tokens,
                      double log_base = std::numbers::e);
TfIdfModel BuildModel(const Document &doc, double log_base = std::numbers::e);

// {"n_sentences": N, "vocab": [{"term", "df"}...], "vectors": [[[id, w]...]...]}
// with weights in the model's log base at 12 significant digits.
std::string ModelToJson(const TfIdfModel &model);

}  // namespace casesum

#endif  // CASESUM_VECTORIZE_H_

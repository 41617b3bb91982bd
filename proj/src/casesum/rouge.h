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

#ifndef CASESUM_ROUGE_H_
#define CASESUM_ROUGE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace casesum {

struct RougeScore {
  double precision = 0;
  double recall = 0;
  double f_measure = 0;
};

// Balanced F-measure; 0 when precision + recall is 0.
RougeScore MakeRougeScore(double precision, double recall);

// Evaluation tokens: the preprocessing tokenizer with stopwords kept and
// optional Porter stemming.
std::vector<std::string> EvalTokens(std::string_view text, bool stem = false);

// Clipped n-gram overlap for n in {1, 2}. Throws Error(kInvalidArgument)
// for any other n.
RougeScore RougeN(std::span<const std::string> candidate, std::span<const std::string> reference,
                  int n);

size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b);
RougeScore RougeL(std::span<const std::string> candidate, std::span<const std::string> reference);

// Weighted LCS with f(k) = k^alpha rewarding consecutive matches.
double WeightedLcs(std::span<const std::string> a, std::span<const std::string> b, double alpha);

// P = (WLCS / f(|candidate|))^(1/alpha), R likewise with |reference|.
// Throws Error(kInvalidAlpha) unless alpha > 1.
RougeScore RougeW(std::span<const std::string> candidate, std::span<const std::string> reference,
                  double alpha = 1.2);

struct RougeReport {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rouge_l;
  RougeScore rouge_w;
};

RougeReport EvaluateAll(std::string_view candidate_text, std::string_view reference_text,
                        double alpha = 1.2, bool stem = false);

}  // namespace casesum

#endif  // CASESUM_ROUGE_H_

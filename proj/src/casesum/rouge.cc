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

#include "casesum/rouge.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "casesum/porter_stemmer.h"
#include "casesum/preprocess.h"
#include "casesum/status.h"

namespace casesum {
namespace {

// Maps both sequences onto shared integer ids so the DPs compare ints.
void Intern(std::span<const std::string> a, std::span<const std::string> b,
            std::vector<uint32_t> *ia, std::vector<uint32_t> *ib) {
  std::unordered_map<std::string_view, uint32_t> ids;
  auto id = [&](const std::string &s) {
    auto [it, inserted] = ids.try_emplace(s, static_cast<uint32_t>(ids.size()));
    return it->second;
  };
  ia->clear();
  ib->clear();
  for (const std::string &s : a) ia->push_back(id(s));
  for (const std::string &s : b) ib->push_back(id(s));
}

using NGramCounts = std::map<std::vector<uint32_t>, size_t>;

NGramCounts CountNGrams(const std::vector<uint32_t> &tokens, int n, size_t *total) {
  NGramCounts counts;
  *total = 0;
  if (tokens.size() < static_cast<size_t>(n)) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<uint32_t>(tokens.begin() + i, tokens.begin() + i + n)];
    ++*total;
  }
  return counts;
}

double Ratio(double numerator, double denominator) {
  return denominator > 0 ? numerator / denominator : 0.0;
}

}  // namespace

RougeScore MakeRougeScore(double precision, double recall) {
  RougeScore s;
  s.precision = precision;
  s.recall = recall;
  s.f_measure = precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
  return s;
}

std::vector<std::string> EvalTokens(std::string_view text, bool stem) {
  std::vector<std::string> tokens = Tokenize(text);
  if (stem) {
    for (std::string &t : tokens) t = Stem(t);
  }
  return tokens;
}

RougeScore RougeN(std::span<const std::string> candidate, std::span<const std::string> reference,
                  int n) {
  if (n != 1 && n != 2) throw Error(ErrorCode::kInvalidArgument, "ROUGE-N supports n = 1 or 2");
  std::vector<uint32_t> c, r;
  Intern(candidate, reference, &c, &r);
  size_t candidate_total = 0, reference_total = 0;
  NGramCounts candidate_counts = CountNGrams(c, n, &candidate_total);
  NGramCounts reference_counts = CountNGrams(r, n, &reference_total);
  size_t overlap = 0;
  for (const auto &[gram, count] : reference_counts) {
    auto it = candidate_counts.find(gram);
    if (it != candidate_counts.end()) overlap += std::min(count, it->second);
  }
  return MakeRougeScore(Ratio(overlap, candidate_total), Ratio(overlap, reference_total));
}

size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<uint32_t> x, y;
  Intern(a, b, &x, &y);
  std::vector<size_t> previous(y.size() + 1, 0), current(y.size() + 1, 0);
  for (size_t i = 1; i <= x.size(); ++i) {
    for (size_t j = 1; j <= y.size(); ++j) {
      current[j] = x[i - 1] == y[j - 1] ? previous[j - 1] + 1
                                        : std::max(previous[j], current[j - 1]);
    }
    std::swap(previous, current);
  }
  return previous[y.size()];
}

RougeScore RougeL(std::span<const std::string> candidate, std::span<const std::string> reference) {
  if (candidate.empty() || reference.empty()) return {};
  auto lcs = static_cast<double>(LcsLength(candidate, reference));
  return MakeRougeScore(lcs / candidate.size(), lcs / reference.size());
}

double WeightedLcs(std::span<const std::string> a, std::span<const std::string> b, double alpha) {
  std::vector<uint32_t> x, y;
  Intern(a, b, &x, &y);
  auto f = [alpha](double k) { return std::pow(k, alpha); };
  // score[j] is c(i, j); run[j] is the length of the consecutive match run
  // ending at (i, j), 0 when x[i] != y[j].
  std::vector<double> score_prev(y.size() + 1, 0), score_cur(y.size() + 1, 0);
  std::vector<size_t> run_prev(y.size() + 1, 0), run_cur(y.size() + 1, 0);
  for (size_t i = 1; i <= x.size(); ++i) {
    for (size_t j = 1; j <= y.size(); ++j) {
      if (x[i - 1] == y[j - 1]) {
        size_t k = run_prev[j - 1];
        score_cur[j] = score_prev[j - 1] + f(k + 1.0) - f(static_cast<double>(k));
        run_cur[j] = k + 1;
      } else {
        score_cur[j] = std::max(score_prev[j], score_cur[j - 1]);
        run_cur[j] = 0;
      }
    }
    std::swap(score_prev, score_cur);
    std::swap(run_prev, run_cur);
  }
  return score_prev[y.size()];
}

RougeScore RougeW(std::span<const std::string> candidate, std::span<const std::string> reference,
                  double alpha) {
  if (!(alpha > 1) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must be greater than 1");
  }
  if (candidate.empty() || reference.empty()) return {};
  double wlcs = WeightedLcs(candidate, reference, alpha);
  auto inverse = [alpha](double v) { return std::pow(v, 1.0 / alpha); };
  double precision = inverse(wlcs / std::pow(static_cast<double>(candidate.size()), alpha));
  double recall = inverse(wlcs / std::pow(static_cast<double>(reference.size()), alpha));
  return MakeRougeScore(std::min(1.0, precision), std::min(1.0, recall));
}

RougeReport EvaluateAll(std::string_view candidate_text, std::string_view reference_text,
                        double alpha, bool stem) {
  if (!(alpha > 1) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must be greater than 1");
  }
  std::vector<std::string> candidate = EvalTokens(candidate_text, stem);
  std::vector<std::string> reference = EvalTokens(reference_text, stem);
  RougeReport report;
  report.rouge1 = RougeN(candidate, reference, 1);
  report.rouge2 = RougeN(candidate, reference, 2);
  report.rouge_l = RougeL(candidate, reference);
  report.rouge_w = RougeW(candidate, reference, alpha);
  return report;
}

}  // namespace casesum

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

#ifndef CASESUM_SUMMARIZE_H_
#define CASESUM_SUMMARIZE_H_

#include <cstddef>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "casesum/kmeans.h"
#include "casesum/preprocess.h"
#include "casesum/vectorize.h"

namespace casesum {

struct RankedSentence {
  size_t position = 0;
  uint32_t cluster = 0;
  double tfidf_score = 0;  // sentence tf-idf mass / document tf-idf mass
  double title_score = 0;  // shared title nouns * 0.1 / title noun count
  double rank_score = 0;   // tfidf_score + title_score
};

using RankedClusters = std::vector<std::vector<RankedSentence>>;

struct Summary {
  std::vector<size_t> selected_positions;  // strictly increasing
  std::vector<std::string> sentences;      // raw text, same order
  std::vector<RankedSentence> scores;      // same order
  std::string text;                        // sentences joined by one space
  size_t per_cluster_quota = 0;            // floor(target / k)
};

// Sum of the sentence's weights over model.total_weight; 0 when the
// document carries no weight at all.
double SentenceTfIdfScore(size_t position, const TfIdfModel &model);

// |nouns ∩ title_nouns| * 0.1 / |title_nouns|; 0 for an empty title.
double TitleSimilarityScore(const Sentence &sentence, const std::set<std::string> &title_nouns);

// One list per cluster, sorted by rank_score descending, then position.
RankedClusters RankClusters(const Document &doc, const TfIdfModel &model,
                            const Clustering &clustering);

// Takes floor(target / k) top sentences from every cluster, then fills the
// remaining slots in rounds: each round gives at most one extra sentence to
// each cluster, preferring clusters whose next candidate has the highest
// rank_score (ties to the smaller position). Clusters shorter than the quota
// give everything and their shortfall is filled the same way. Output length
// is min(target, n) and sentences come out in document order.
Summary ExtractSummary(const Document &doc, const RankedClusters &ranked, size_t target);

struct SummarizerOptions {
  KMeansConfig kmeans;  // kmeans.k == 0 selects k automatically
  size_t target_sentences = 150;
  // Base of the idf logarithm in the reported model; see TfIdfModel.
  double log_base = std::numbers::e;
  // With kmeans.k == 0, choose k by the elbow method instead of the
  // square-root heuristic.
  bool elbow = false;
};

// Every intermediate product of one pipeline run.
struct PipelineResult {
  Document document;
  TfIdfModel model;
  Clustering clustering;
  Summary summary;
};

// preprocess -> tf-idf -> choose k -> k-means -> rank -> extract.
// Throws Error(kInvalidArgument) for target_sentences == 0.
PipelineResult RunPipeline(const RawInput &input, const SummarizerOptions &options,
                           const Preprocessor &preprocessor);
PipelineResult RunPipeline(const RawInput &input, const SummarizerOptions &options);

Summary SummarizeDocument(const RawInput &input, const KMeansConfig &config,
                          size_t target_sentences);

}  // namespace casesum

#endif  // CASESUM_SUMMARIZE_H_

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

#include "casesum/summarize.h"

#include <algorithm>

#include "casesum/status.h"

namespace casesum {
namespace {

bool RanksBefore(const RankedSentence &a, const RankedSentence &b) {
  if (a.rank_score != b.rank_score) return a.rank_score > b.rank_score;
  return a.position < b.position;
}

size_t ChooseK(const TfIdfModel &model, const SummarizerOptions &options) {
  const size_t n = model.n_sentences;
  if (options.kmeans.k != 0) return SelectK(n, options.target_sentences, options.kmeans.k);
  size_t heuristic = SelectK(n, options.target_sentences, std::nullopt);
  if (!options.elbow) return heuristic;
  size_t k_max = std::min({n, options.target_sentences, std::max<size_t>(2, 2 * heuristic)});
  if (k_max < 2) return 1;
  return ElbowK(model.vectors, model.dimension(), 1, k_max, options.kmeans);
}

}  // namespace

double SentenceTfIdfScore(size_t position, const TfIdfModel &model) {
  if (position >= model.vectors.size()) {
    throw Error(ErrorCode::kInvalidArgument, "sentence position out of range");
  }
  if (model.total_weight <= 0) return 0;
  double sum = 0;
  for (const SparseEntry &e : model.vectors[position]) sum += e.weight;
  return std::min(1.0, sum / model.total_weight);
}

double TitleSimilarityScore(const Sentence &sentence, const std::set<std::string> &title_nouns) {
  if (title_nouns.empty()) return 0;
  size_t shared = 0;
  for (const std::string &noun : sentence.nouns) {
    if (title_nouns.count(noun) != 0) ++shared;
  }
  return static_cast<double>(shared) * 0.1 / static_cast<double>(title_nouns.size());
}

RankedClusters RankClusters(const Document &doc, const TfIdfModel &model,
                            const Clustering &clustering) {
  if (clustering.assignments.size() != doc.sentences.size() ||
      model.n_sentences != doc.sentences.size()) {
    throw Error(ErrorCode::kInvalidArgument, "clustering does not cover the document");
  }
  RankedClusters ranked(clustering.k);
  for (const Sentence &s : doc.sentences) {
    RankedSentence r;
    r.position = s.position;
    r.cluster = clustering.assignments[s.position];
    r.tfidf_score = SentenceTfIdfScore(s.position, model);
    r.title_score = TitleSimilarityScore(s, doc.title_nouns);
    r.rank_score = r.tfidf_score + r.title_score;
    ranked[r.cluster].push_back(r);
  }
  for (auto &cluster : ranked) std::sort(cluster.begin(), cluster.end(), RanksBefore);
  return ranked;
}

Summary ExtractSummary(const Document &doc, const RankedClusters &ranked, size_t target) {
  if (target == 0) throw Error(ErrorCode::kInvalidArgument, "target length must be positive");
  if (ranked.empty()) throw Error(ErrorCode::kInvalidArgument, "no clusters to extract from");
  const size_t k = ranked.size();
  size_t available = 0;
  for (const auto &cluster : ranked) available += cluster.size();
  const size_t total = std::min(target, available);

  Summary summary;
  summary.per_cluster_quota = target / k;
  std::vector<size_t> taken(k);
  size_t count = 0;
  for (size_t c = 0; c < k; ++c) {
    taken[c] = std::min(summary.per_cluster_quota, ranked[c].size());
    count += taken[c];
  }

  while (count < total) {
    std::vector<size_t> open;
    for (size_t c = 0; c < k; ++c) {
      if (taken[c] < ranked[c].size()) open.push_back(c);
    }
    std::sort(open.begin(), open.end(), [&](size_t a, size_t b) {
      return RanksBefore(ranked[a][taken[a]], ranked[b][taken[b]]);
    });
    size_t round = std::min(total - count, open.size());
    for (size_t i = 0; i < round; ++i) ++taken[open[i]];
    count += round;
  }

  std::vector<RankedSentence> chosen;
  chosen.reserve(total);
  for (size_t c = 0; c < k; ++c) {
    chosen.insert(chosen.end(), ranked[c].begin(), ranked[c].begin() + taken[c]);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const RankedSentence &a, const RankedSentence &b) { return a.position < b.position; });

  for (const RankedSentence &r : chosen) {
    const std::string &raw = doc.sentences.at(r.position).raw;
    if (!summary.text.empty()) summary.text += ' ';
    summary.text += raw;
    summary.selected_positions.push_back(r.position);
    summary.sentences.push_back(raw);
    summary.scores.push_back(r);
  }
  return summary;
}

PipelineResult RunPipeline(const RawInput &input, const SummarizerOptions &options,
                           const Preprocessor &preprocessor) {
  if (options.target_sentences == 0) {
    throw Error(ErrorCode::kInvalidArgument, "target length must be positive");
  }
  PipelineResult result;
  result.document = preprocessor.Process(input);
  result.model = BuildModel(result.document, options.log_base);
  KMeansConfig config = options.kmeans;
  config.k = ChooseK(result.model, options);
  result.clustering = KMeans(result.model.vectors, result.model.dimension(), config);
  RankedClusters ranked = RankClusters(result.document, result.model, result.clustering);
  result.summary = ExtractSummary(result.document, ranked, options.target_sentences);
  return result;
}

PipelineResult RunPipeline(const RawInput &input, const SummarizerOptions &options) {
  static const Preprocessor preprocessor;
  return RunPipeline(input, options, preprocessor);
}

Summary SummarizeDocument(const RawInput &input, const KMeansConfig &config,
                          size_t target_sentences) {
  SummarizerOptions options;
  options.kmeans = config;
  options.target_sentences = target_sentences;
  return RunPipeline(input, options).summary;
}

}  // namespace casesum

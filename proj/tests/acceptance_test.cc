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

// Acceptance suite. Each criterion prints one PASS or FAIL line; the exit
// status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "casesum/kmeans.h"
#include "casesum/preprocess.h"
#include "casesum/rouge.h"
#include "casesum/summarize.h"
#include "casesum/vectorize.h"
#include "test_support.h"

namespace casesum {
namespace {

using Clock = std::chrono::steady_clock;
using testing::DensePoint;
using Tokens = std::vector<std::string>;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure message; later ones are counted only.
  void Fail(const std::string &message) {
    if (pass) detail = message;
    pass = false;
  }
};

std::string Format(const char *fmt, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

bool Near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

Outcome RougeOracleEquivalence() {
  Outcome out;
  std::mt19937_64 rng(20260101);
  auto start = Clock::now();
  for (int pair = 0; pair < 200; ++pair) {
    Tokens cand = testing::RandomTokens(rng, 12, 1 + testing::Below(rng, 6));
    Tokens ref = testing::RandomTokens(rng, 20, 1 + testing::Below(rng, 6));
    for (int n = 1; n <= 2; ++n) {
      size_t overlap = testing::NaiveNGramOverlap(cand, ref, n);
      size_t cn = testing::NGramTotal(cand.size(), n), rn = testing::NGramTotal(ref.size(), n);
      double p = cn ? static_cast<double>(overlap) / cn : 0.0;
      double r = rn ? static_cast<double>(overlap) / rn : 0.0;
      RougeScore s = RougeN(cand, ref, n);
      if (!Near(s.precision, p, 1e-9) || !Near(s.recall, r, 1e-9) ||
          !Near(s.f_measure, testing::F1(p, r), 1e-9)) {
        out.Fail(Format("ROUGE-%.0f mismatch on pair %.0f", n, pair));
      }
    }
    auto lcs = static_cast<double>(testing::ExhaustiveLcs(cand, ref));
    double p = cand.empty() ? 0.0 : lcs / cand.size();
    double r = ref.empty() ? 0.0 : lcs / ref.size();
    RougeScore l = RougeL(cand, ref);
    if (!Near(l.precision, p, 1e-9) || !Near(l.recall, r, 1e-9) ||
        !Near(l.f_measure, testing::F1(p, r), 1e-9)) {
      out.Fail(Format("ROUGE-L mismatch on pair %.0f", pair));
    }
  }
  double elapsed = Seconds(start);
  if (elapsed >= 5.0) out.Fail(Format("took %.2f s", elapsed));
  if (out.pass) out.detail = Format("200 pairs match the oracles within 1e-9 in %.3f s", elapsed);
  return out;
}

Outcome RougeWRunSensitivity() {
  Outcome out;
  Tokens reference = EvalTokens("a b c d e");
  Tokens consecutive = EvalTokens("a b c x y");
  Tokens scattered = EvalTokens("a x c x e");
  RougeScore lc = RougeL(consecutive, reference), ls = RougeL(scattered, reference);
  RougeScore wc = RougeW(consecutive, reference), ws = RougeW(scattered, reference);
  if (lc.f_measure != ls.f_measure) out.Fail("ROUGE-L differs");
  if (!(wc.f_measure > ws.f_measure)) out.Fail("ROUGE-W not strictly higher for consecutive");
  out.detail = Format("ROUGE-W F %.4f > %.4f, ROUGE-L F %.4f on both", wc.f_measure, ws.f_measure,
                      lc.f_measure) +
               (out.pass ? "" : " | " + out.detail);
  return out;
}

Outcome KMeansInvariants() {
  Outcome out;
  std::mt19937_64 rng(77);
  for (int instance = 0; instance < 50; ++instance) {
    size_t n = 1 + testing::Below(rng, 100);
    size_t d = 1 + testing::Below(rng, 50);
    size_t k = 1 + testing::Below(rng, std::min<size_t>(n, 8));
    auto points = testing::FromDense(testing::RandomPoints(rng, n, d, 0.3));
    KMeansConfig config;
    config.k = k;
    config.seed = rng();
    config.tolerance = 0;
    Clustering c = KMeans(points, d, config);
    for (size_t i = 1; i < c.inertia_history.size(); ++i) {
      if (c.inertia_history[i] > c.inertia_history[i - 1] + 1e-9) {
        out.Fail(Format("instance %.0f: inertia rose at iteration %.0f", instance, i));
      }
    }
    if (!c.converged) out.Fail(Format("instance %.0f did not converge", instance));
    auto normalized = NormalizeRows(points);
    if (AssignToNearest(normalized, c) != c.assignments) {
      out.Fail(Format("instance %.0f: assignment step moved a point", instance));
    }
    std::vector<size_t> sizes(c.k, 0);
    for (uint32_t a : c.assignments) ++sizes[a];
    if (std::count(sizes.begin(), sizes.end(), 0u) > 0) {
      out.Fail(Format("instance %.0f: empty cluster", instance));
    }
    bool all_zero = std::all_of(points.begin(), points.end(), [](auto &p) { return p.empty(); });
    if (c.k != k && !all_zero) out.Fail(Format("instance %.0f: k changed", instance));
  }

  // Tiny instances against exhaustive partitioning.
  int tiny = 0;
  double worst = 0;
  for (int instance = 0; instance < 60; ++instance, ++tiny) {
    size_t n = 2 + testing::Below(rng, 7);
    size_t d = 1 + testing::Below(rng, 4);
    size_t k = 1 + testing::Below(rng, std::min<size_t>(n, 3));
    std::vector<DensePoint> dense = testing::RandomPoints(rng, n, d, 0.8);
    auto points = testing::FromDense(dense);
    double best = std::numeric_limits<double>::infinity();
    for (uint64_t seed = 0; seed < 16; ++seed) {
      KMeansConfig config;
      config.k = k;
      config.seed = seed;
      config.normalize = false;
      config.tolerance = 0;
      Clustering c = KMeans(points, d, config);
      if (c.k == k) best = std::min(best, c.inertia);
    }
    double optimum = testing::BruteForceMinInertia(dense, k);
    double gap = std::fabs(best - optimum) / std::max(optimum, 1e-300);
    if (optimum == 0) gap = best <= 1e-12 ? 0 : 1;
    worst = std::max(worst, gap);
    if (gap > 1e-6) {
      out.Fail(Format("tiny instance %.0f: best %.9g vs optimum %.9g", instance, best, optimum));
    }
  }
  if (out.pass) {
    out.detail = Format(
        "50 random instances monotone, stable and non-empty; %.0f tiny instances within "
        "%.2g of the exhaustive optimum",
        tiny, worst);
  }
  return out;
}

Outcome FormulaFidelity() {
  Outcome out;
  const double l = std::log(1.5);
  TfIdfModel model = BuildModel(std::vector<Tokens>{{"appeal", "appeal"}, {"court"},
                                                    {"court", "appeal"}});
  auto appeal = model.vocabulary.Find("appeal");
  double weight = 0;
  for (const SparseEntry &e : model.vectors[0]) {
    if (appeal && e.term == *appeal) weight = e.weight;
  }
  if (!Near(weight, 2 * l, 1e-9)) out.Fail(Format("appeal weight %.12f vs %.12f", weight, 2 * l));
  double score = SentenceTfIdfScore(0, model);
  if (!Near(score, 2 * l / (5 * l), 1e-9)) out.Fail(Format("sentence score %.12f", score));
  Sentence s;
  s.nouns = {"news", "hearing"};
  double one = TitleSimilarityScore(s, {"rush", "news", "ltd"});
  if (!Near(one, 0.1 / 3, 1e-9)) out.Fail(Format("title score %.12f vs 1/30", one));
  s.nouns = {"rush", "news", "ltd", "costs"};
  double all = TitleSimilarityScore(s, {"rush", "news", "ltd"});
  if (!Near(all, 0.1, 1e-9)) out.Fail(Format("title score %.12f vs 0.1", all));
  if (out.pass) {
    out.detail = Format("weight %.10f, sentence score %.10f, title scores %.10f", weight, score,
                        one) +
                 Format(" and %.10f", all);
  }
  return out;
}

Outcome LogBaseInvariance() {
  Outcome out;
  std::mt19937_64 rng(5);
  int documents = 0;
  for (; documents < 20; ++documents) {
    auto doc = testing::MakeSyntheticDocument(rng, 30 + testing::Below(rng, 300), 1500);
    SummarizerOptions options;
    options.target_sentences = 5 + testing::Below(rng, 40);
    options.kmeans.seed = 1000 + documents;
    PipelineResult natural = RunPipeline({doc.text, doc.title}, options);
    options.log_base = 10.0;
    PipelineResult common = RunPipeline({doc.text, doc.title}, options);
    if (natural.summary.text != common.summary.text) {
      out.Fail(Format("document %.0f: summaries differ", documents));
    }
    // The reported model must really use the requested base.
    double ratio = natural.model.InBase(natural.model.total_weight) /
                   common.model.InBase(common.model.total_weight);
    if (!Near(ratio, std::log(10.0), 1e-9)) {
      out.Fail(Format("document %.0f: weight ratio %.12f is not ln 10", documents, ratio));
    }
  }
  if (out.pass) out.detail = Format("%.0f documents byte-identical under ln and log10", documents);
  return out;
}

Outcome EndToEndContracts() {
  Outcome out;
  std::mt19937_64 rng(6);
  const size_t targets[] = {1, 10, 25, 150, 600};
  for (int index = 0; index < 100; ++index) {
    size_t n_body = 29 + testing::Below(rng, 471);
    auto doc = testing::MakeSyntheticDocument(rng, n_body, 200 + testing::Below(rng, 3000));
    SummarizerOptions options;
    options.target_sentences = targets[index % 5];
    options.kmeans.seed = rng();
    RawInput input{doc.text, doc.title};
    PipelineResult first = RunPipeline(input, options);
    PipelineResult second = RunPipeline(input, options);
    const Summary &s = first.summary;
    size_t n = first.document.sentences.size();
    if (n != doc.sentences) out.Fail(Format("document %.0f: %.0f sentences", index, n));
    if (n < 30 || n > 500) out.Fail(Format("document %.0f: size %.0f out of range", index, n));
    if (s.selected_positions.size() != std::min(options.target_sentences, n)) {
      out.Fail(Format("document %.0f: length %.0f", index, s.selected_positions.size()));
    }
    std::vector<std::string> split = SplitSentences(NormalizeText(doc.text));
    for (size_t i = 0; i < s.selected_positions.size(); ++i) {
      size_t p = s.selected_positions[i];
      if (i > 0 && p <= s.selected_positions[i - 1]) {
        out.Fail(Format("document %.0f: positions not increasing", index));
      }
      if (p >= split.size() || s.sentences[i] != split[p] ||
          doc.text.find(s.sentences[i]) == std::string::npos) {
        out.Fail(Format("document %.0f: sentence %.0f is not extractive", index, i));
      }
    }
    std::string joined;
    for (size_t i = 0; i < s.sentences.size(); ++i) joined += (i ? " " : "") + s.sentences[i];
    if (joined != s.text) out.Fail(Format("document %.0f: text is not the joined sentences", index));
    if (s.text != second.summary.text ||
        first.clustering.assignments != second.clustering.assignments) {
      out.Fail(Format("document %.0f: runs differ", index));
    }
  }
  if (out.pass) {
    out.detail = "100 documents extractive, ordered, exact length and deterministic";
  }
  return out;
}

// A document with a few sentences about the named parties on a topic
// vocabulary, buried among background sentences, plus an independently
// written reference summary about the same topic.
struct PlantedDocument {
  std::string title;
  std::string text;
  std::string reference;
  size_t planted = 0;
};

PlantedDocument MakePlantedDocument(std::mt19937_64 &rng, size_t index) {
  const std::string party_a = testing::Capitalize(testing::PseudoWord(90000 + 2 * index));
  const std::string party_b = testing::Capitalize(testing::PseudoWord(90001 + 2 * index));
  auto topic_word = [&] { return testing::PseudoWord(50000 + 40 * index + testing::Below(rng, 30)); };
  auto background_word = [&] { return testing::PseudoWord(testing::Below(rng, 3000)); };
  auto sentence = [&](bool topical) {
    size_t len = 8 + testing::Below(rng, 12);
    std::string s = testing::Capitalize(topical ? topic_word() : background_word());
    for (size_t w = 1; w < len; ++w) {
      s += ' ';
      if (topical && w == 2) {
        s += party_a;
      } else if (topical && w == 5) {
        s += party_b;
      } else {
        s += topical && testing::Unit(rng) < 0.7 ? topic_word() : background_word();
      }
    }
    return s + ".";
  };

  PlantedDocument doc;
  doc.title = party_a + " v " + party_b;
  size_t n_background = 60 + testing::Below(rng, 200);
  doc.planted = 12;
  std::vector<bool> topical(n_background + doc.planted, false);
  std::fill(topical.begin(), topical.begin() + doc.planted, true);
  std::shuffle(topical.begin(), topical.end(), rng);
  doc.text = doc.title + "\n\n";
  for (bool t : topical) doc.text += sentence(t) + " ";
  for (size_t i = 0; i < doc.planted; ++i) doc.reference += sentence(true) + " ";
  return doc;
}

Outcome QualitySanity() {
  Outcome out;
  std::mt19937_64 rng(7);
  int wins = 0;
  const int documents = 20;
  double pipeline_mean = 0, random_mean = 0;
  for (int index = 0; index < documents; ++index) {
    PlantedDocument doc = MakePlantedDocument(rng, index);
    SummarizerOptions options;
    options.target_sentences = doc.planted;
    options.kmeans.seed = 4000 + index;
    PipelineResult result = RunPipeline({doc.text, doc.title}, options);
    size_t n = result.document.sentences.size();
    size_t length = result.summary.selected_positions.size();

    std::mt19937_64 pick(4000 + index);
    std::vector<size_t> positions(n);
    for (size_t i = 0; i < n; ++i) positions[i] = i;
    std::shuffle(positions.begin(), positions.end(), pick);
    positions.resize(length);
    std::sort(positions.begin(), positions.end());
    std::string random_text;
    for (size_t p : positions) random_text += (random_text.empty() ? "" : " ") +
                                              result.document.sentences[p].raw;

    double ours = EvaluateAll(result.summary.text, doc.reference).rouge1.recall;
    double baseline = EvaluateAll(random_text, doc.reference).rouge1.recall;
    pipeline_mean += ours / documents;
    random_mean += baseline / documents;
    if (ours > baseline) ++wins;
  }
  out.detail = Format("pipeline beats random extract on %.0f/20 documents (mean recall %.3f vs %.3f)",
                      wins, pipeline_mean, random_mean);
  if (wins < 16) out.pass = false;
  return out;
}

Outcome Performance() {
  Outcome out;
  std::mt19937_64 rng(8);
  auto doc = testing::MakeSyntheticDocument(rng, 9999, 40000);
  SummarizerOptions options;
  options.target_sentences = 150;
  auto start = Clock::now();
  PipelineResult result = RunPipeline({doc.text, doc.title}, options);
  double elapsed = Seconds(start);
  size_t n = result.document.sentences.size();
  out.detail = Format("%.0f sentences, vocabulary %.0f, ", n, result.model.dimension()) +
               Format("k = %.0f, %.0f summary sentences, ", result.clustering.k,
                      result.summary.selected_positions.size()) +
               Format("%.2f s (budget 60 s, hard limit 180 s)", elapsed);
  if (n != 10000 || result.summary.selected_positions.size() != 150) out.pass = false;
  if (elapsed >= 60.0) out.pass = false;
  return out;
}

}  // namespace
}  // namespace casesum

int main() {
  using casesum::Outcome;
  struct Criterion {
    const char *name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"rouge-oracle-equivalence", casesum::RougeOracleEquivalence},
      {"rouge-w-run-sensitivity", casesum::RougeWRunSensitivity},
      {"kmeans-invariants", casesum::KMeansInvariants},
      {"formula-fidelity", casesum::FormulaFidelity},
      {"log-base-invariance", casesum::LogBaseInvariance},
      {"end-to-end-contracts", casesum::EndToEndContracts},
      {"quality-sanity", casesum::QualitySanity},
      {"performance-budget", casesum::Performance},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion &c : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception &e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failures;
    std::printf("%s [%d] %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, c.name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}

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

#include "casesum/vectorize.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "casesum/kmeans.h"
#include "casesum/status.h"
#include "casesum/summarize.h"
#include "test_support.h"

namespace casesum {
namespace {

using Sentences = std::vector<std::vector<std::string>>;

double WeightOf(const TfIdfModel &model, size_t sentence, std::string_view term) {
  auto id = model.vocabulary.Find(term);
  if (!id) return 0;
  for (const SparseEntry &e : model.vectors[sentence]) {
    if (e.term == *id) return e.weight;
  }
  return 0;
}

TEST(BuildModelTest, HandComputedWeights) {
  Sentences s = {{"appeal", "appeal"}, {"court"}, {"court", "appeal"}};
  TfIdfModel model = BuildModel(s);
  EXPECT_EQ(model.n_sentences, 3u);
  // 2 * ln(3/2)
  EXPECT_NEAR(WeightOf(model, 0, "appeal"), 0.8109302162163288, 1e-12);
  EXPECT_NEAR(WeightOf(model, 1, "court"), 0.4054651081081644, 1e-12);
  EXPECT_NEAR(WeightOf(model, 2, "appeal"), 0.4054651081081644, 1e-12);
  EXPECT_NEAR(model.total_weight, 5 * std::log(1.5), 1e-12);
}

TEST(BuildModelTest, TermInEverySentenceHasZeroWeight) {
  Sentences s = {{"court", "a"}, {"court", "b"}, {"court"}};
  TfIdfModel model = BuildModel(s);
  ASSERT_TRUE(model.vocabulary.Find("court"));
  EXPECT_EQ(model.vocabulary.df(*model.vocabulary.Find("court")), 3u);
  for (const SparseVector &v : model.vectors) {
    for (const SparseEntry &e : v) EXPECT_NE(e.term, *model.vocabulary.Find("court"));
  }
}

TEST(BuildModelTest, SingleSentenceIsAllZero) {
  TfIdfModel model = BuildModel(Sentences{{"court", "appeal"}});
  EXPECT_EQ(model.vectors.size(), 1u);
  EXPECT_TRUE(model.vectors[0].empty());
  EXPECT_EQ(model.total_weight, 0.0);
}

TEST(BuildModelTest, EmptyDocumentThrows) {
  try {
    BuildModel(Sentences{});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyDocument);
  }
}

TEST(BuildModelTest, InvalidLogBase) {
  EXPECT_THROW(BuildModel(Sentences{{"a"}}, 1.0), Error);
  EXPECT_THROW(BuildModel(Sentences{{"a"}}, -2.0), Error);
}

TEST(BuildModelTest, LogBaseScalesWeightsUniformly) {
  Sentences s = {{"a", "b", "b"}, {"b", "c"}, {"c", "d", "d", "d"}, {"a"}};
  TfIdfModel ln = BuildModel(s);
  TfIdfModel log10 = BuildModel(s, 10.0);
  ASSERT_EQ(ln.vectors.size(), log10.vectors.size());
  for (size_t j = 0; j < ln.vectors.size(); ++j) {
    ASSERT_EQ(ln.vectors[j].size(), log10.vectors[j].size());
    for (size_t e = 0; e < ln.vectors[j].size(); ++e) {
      // One stored representation; the base applies when reporting.
      EXPECT_EQ(ln.vectors[j][e], log10.vectors[j][e]);
      EXPECT_NEAR(ln.InBase(ln.vectors[j][e].weight) / std::log(10.0),
                  log10.InBase(log10.vectors[j][e].weight), 1e-12);
    }
  }
}

// Changing the base scales every weight by one constant, so sentence score
// ratios and k-means assignments do not move.
TEST(BuildModelTest, LogBaseLeavesScoresAndClustersUnchanged) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    size_t n = 2 + rng() % 30;
    Sentences s(n);
    for (auto &sentence : s) {
      for (size_t w = 1 + rng() % 8; w > 0; --w) {
        sentence.push_back(testing::PseudoWord(rng() % 40));
      }
    }
    TfIdfModel ln = BuildModel(s);
    TfIdfModel log10 = BuildModel(s, 10.0);
    for (size_t j = 0; j < n; ++j) {
      EXPECT_NEAR(SentenceTfIdfScore(j, ln), SentenceTfIdfScore(j, log10), 1e-9);
    }
    KMeansConfig config;
    config.k = 1 + rng() % n;
    config.seed = rng();
    EXPECT_EQ(KMeans(ln, config).assignments, KMeans(log10, config).assignments)
        << "trial " << trial;
  }
}

// Random small documents: df against a naive scan, structural invariants.
TEST(BuildModelTest, PropertiesOnRandomDocuments) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    size_t n = 1 + rng() % 10;
    Sentences s(n);
    for (auto &sentence : s) {
      for (size_t w = rng() % 7; w > 0; --w) {
        sentence.push_back(std::string(1, static_cast<char>('a' + rng() % 8)));
      }
    }
    TfIdfModel model = BuildModel(s);
    ASSERT_EQ(model.vectors.size(), n);
    EXPECT_EQ(model, BuildModel(s));

    std::set<std::string> seen;
    for (const auto &sentence : s) seen.insert(sentence.begin(), sentence.end());
    ASSERT_EQ(model.vocabulary.size(), seen.size());
    for (const std::string &term : seen) {
      uint32_t naive = 0;
      for (const auto &sentence : s) {
        if (std::find(sentence.begin(), sentence.end(), term) != sentence.end()) ++naive;
      }
      auto id = model.vocabulary.Find(term);
      ASSERT_TRUE(id);
      EXPECT_EQ(model.vocabulary.df(*id), naive);
      EXPECT_GE(naive, 1u);
      EXPECT_LE(naive, n);
    }

    double total = 0;
    for (const SparseVector &v : model.vectors) {
      for (size_t e = 0; e < v.size(); ++e) {
        EXPECT_GT(v[e].weight, 0);
        if (e > 0) {
          EXPECT_LT(v[e - 1].term, v[e].term);
        }
        total += v[e].weight;
      }
    }
    EXPECT_NEAR(model.total_weight, total, 1e-9 * std::max(1.0, total));
  }
}

TEST(VectorNormTest, Examples) {
  EXPECT_EQ(VectorNorm({}), 0.0);
  EXPECT_DOUBLE_EQ(VectorNorm({{0, 3.0}, {2, 4.0}}), 5.0);
  EXPECT_DOUBLE_EQ(VectorNorm({{1, 0.8109}}), 0.8109);
}

TEST(ModelToJsonTest, Shape) {
  TfIdfModel model = BuildModel(Sentences{{"appeal", "appeal"}, {"court"}, {"court", "appeal"}});
  auto j = nlohmann::json::parse(ModelToJson(model));
  EXPECT_EQ(j["n_sentences"], 3);
  ASSERT_EQ(j["vocab"].size(), 2u);
  EXPECT_EQ(j["vocab"][0]["term"], "appeal");
  EXPECT_EQ(j["vocab"][0]["df"], 2);
  ASSERT_EQ(j["vectors"].size(), 3u);
  EXPECT_EQ(j["vectors"][0][0][0], 0);
  EXPECT_EQ(j["vectors"][0][0][1].get<double>(), 0.810930216216);
  EXPECT_NE(ModelToJson(model).find("0.810930216216]"), std::string::npos);
  // 2 log10(1.5)
  auto j10 = nlohmann::json::parse(ModelToJson(BuildModel(
      Sentences{{"appeal", "appeal"}, {"court"}, {"court", "appeal"}}, 10.0)));
  EXPECT_EQ(j10["vectors"][0][0][1].get<double>(), 0.352182518111);
}

}  // namespace
}  // namespace casesum

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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "casesum/status.h"

namespace casesum {

double VectorNorm(const SparseVector &v) {
  double sum = 0;
  for (const SparseEntry &e : v) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

std::optional<TermId> Vocabulary::Find(std::string_view term) const {
  auto it = ids_.find(term);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

TermId Vocabulary::Intern(std::string_view term) {
  auto it = ids_.find(term);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<TermId>(terms_.size());
  ids_.emplace(std::string(term), id);
  terms_.emplace_back(term);
  df_.push_back(0);
  return id;
}

TfIdfModel BuildModel(std::span<const std::vector<std::string>> sentence_tokens,
                      double log_base) {
  if (sentence_tokens.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "cannot build a model without sentences");
  }
  if (!(log_base > 0) || log_base == 1 || !std::isfinite(log_base)) {
    throw Error(ErrorCode::kInvalidArgument, "log base must be positive and not 1");
  }

  TfIdfModel model;
  model.n_sentences = sentence_tokens.size();

  // Raw term counts per sentence, sorted by term id.
  std::vector<std::vector<std::pair<TermId, uint32_t>>> counts(model.n_sentences);
  for (size_t j = 0; j < model.n_sentences; ++j) {
    std::vector<TermId> ids;
    ids.reserve(sentence_tokens[j].size());
    for (const std::string &token : sentence_tokens[j]) {
      ids.push_back(model.vocabulary.Intern(token));
    }
    std::sort(ids.begin(), ids.end());
    auto &row = counts[j];
    for (TermId id : ids) {
      if (!row.empty() && row.back().first == id) {
        ++row.back().second;
      } else {
        row.emplace_back(id, 1);
        model.vocabulary.IncrementDf(id);
      }
    }
  }

  const double n = static_cast<double>(model.n_sentences);
  model.log_base = log_base;
  std::vector<double> idf(model.vocabulary.size());
  for (TermId id = 0; id < idf.size(); ++id) idf[id] = std::log(n / model.vocabulary.df(id));

  model.vectors.resize(model.n_sentences);
  for (size_t j = 0; j < model.n_sentences; ++j) {
    SparseVector &v = model.vectors[j];
    for (auto [id, count] : counts[j]) {
      double weight = count * idf[id];
      if (weight > 0) v.push_back({id, weight});
    }
  }
  for (const SparseVector &v : model.vectors) {
    for (const SparseEntry &e : v) model.total_weight += e.weight;
  }
  return model;
}

TfIdfModel BuildModel(const Document &doc, double log_base) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(doc.sentences.size());
  for (const Sentence &s : doc.sentences) tokens.push_back(s.tokens);
  return BuildModel(tokens, log_base);
}

std::string ModelToJson(const TfIdfModel &model) {
  std::string out = "{\"n_sentences\": " + std::to_string(model.n_sentences) + ", \"vocab\": [";
  for (TermId id = 0; id < model.vocabulary.size(); ++id) {
    if (id > 0) out += ", ";
    out += "{\"term\": " + nlohmann::json(model.vocabulary.term(id)).dump() +
           ", \"df\": " + std::to_string(model.vocabulary.df(id)) + "}";
  }
  out += "], \"vectors\": [";
  char buf[32];
  for (size_t j = 0; j < model.vectors.size(); ++j) {
    if (j > 0) out += ", ";
    out += "[";
    for (size_t e = 0; e < model.vectors[j].size(); ++e) {
      const SparseEntry &entry = model.vectors[j][e];
      std::snprintf(buf, sizeof(buf), "%.12g", model.InBase(entry.weight));
      if (e > 0) out += ", ";
      out += "[" + std::to_string(entry.term) + ", " + buf + "]";
    }
    out += "]";
  }
  out += "]}";
  return out;
}

}  // namespace casesum

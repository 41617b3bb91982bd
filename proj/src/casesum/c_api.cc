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

#include "casesum/casesum.h"

#include <exception>
#include <memory>
#include <new>
#include <numbers>
#include <optional>
#include <string>

#include "casesum/kmeans.h"
#include "casesum/preprocess.h"
#include "casesum/rouge.h"
#include "casesum/status.h"
#include "casesum/summarize.h"
#include "casesum/vectorize.h"

struct cs_summary {
  casesum::PipelineResult result;
  std::optional<std::string> model_json;
  std::optional<std::string> clustering_json;
};

namespace {

thread_local std::string last_error;

cs_status ToStatus(casesum::ErrorCode code) {
  switch (code) {
    case casesum::ErrorCode::kEmptyDocument: return CS_ERR_EMPTY_DOCUMENT;
    case casesum::ErrorCode::kInvalidK: return CS_ERR_INVALID_K;
    case casesum::ErrorCode::kInvalidAlpha: return CS_ERR_INVALID_ALPHA;
    case casesum::ErrorCode::kInvalidArgument: return CS_ERR_INVALID_ARGUMENT;
    case casesum::ErrorCode::kIoError: return CS_ERR_IO;
  }
  return CS_ERR_INTERNAL;
}

template <typename Fn>
cs_status Guard(Fn &&fn) {
  try {
    last_error.clear();
    fn();
    return CS_OK;
  } catch (const casesum::Error &e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return CS_ERR_INTERNAL;
  } catch (const std::exception &e) {
    last_error = e.what();
    return CS_ERR_INTERNAL;
  }
}

cs_status Fail(cs_status status, const char *message) {
  last_error = message;
  return status;
}

}  // namespace

extern "C" {

const char *cs_version(void) { return "1.0.0"; }

const char *cs_status_name(cs_status status) {
  switch (status) {
    case CS_OK: return "ok";
    case CS_ERR_EMPTY_DOCUMENT: return "empty document";
    case CS_ERR_INVALID_K: return "invalid k";
    case CS_ERR_INVALID_ALPHA: return "invalid alpha";
    case CS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CS_ERR_IO: return "i/o error";
    case CS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char *cs_last_error(void) { return last_error.c_str(); }

void cs_summarize_options_init(cs_summarize_options *options) {
  if (options == nullptr) return;
  options->title = nullptr;
  options->target_sentences = 150;
  options->k = 0;
  options->seed = 42;
  options->max_iterations = 300;
  options->tolerance = 1e-6;
  options->normalize = 1;
  options->log_base = std::numbers::e;
  options->elbow = 0;
  options->stopwords_path = nullptr;
  options->noun_exclusions_path = nullptr;
}

cs_status cs_summarize(const char *text, size_t length, const cs_summarize_options *options,
                       cs_summary **out) {
  if (out == nullptr) return Fail(CS_ERR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  if (text == nullptr && length > 0) return Fail(CS_ERR_INVALID_ARGUMENT, "text is NULL");
  cs_summarize_options defaults;
  cs_summarize_options_init(&defaults);
  if (options == nullptr) options = &defaults;

  return Guard([&] {
    casesum::RawInput input;
    input.text.assign(text == nullptr ? "" : text, length);
    input.title = options->title != nullptr ? std::string(options->title)
                                            : casesum::DefaultTitle(input.text);

    casesum::SummarizerOptions opts;
    opts.target_sentences = options->target_sentences;
    opts.kmeans.k = options->k;
    opts.kmeans.seed = options->seed;
    opts.kmeans.max_iterations = options->max_iterations;
    opts.kmeans.tolerance = options->tolerance;
    opts.kmeans.normalize = options->normalize != 0;
    opts.log_base = options->log_base;
    opts.elbow = options->elbow != 0;

    casesum::WordList stopwords = options->stopwords_path != nullptr
                                      ? casesum::WordList::Load(options->stopwords_path)
                                      : casesum::DefaultStopwords();
    casesum::WordList exclusions = options->noun_exclusions_path != nullptr
                                       ? casesum::WordList::Load(options->noun_exclusions_path)
                                       : casesum::DefaultNounExclusions();
    casesum::Preprocessor preprocessor(std::move(stopwords), std::move(exclusions));

    auto summary = std::make_unique<cs_summary>();
    summary->result = casesum::RunPipeline(input, opts, preprocessor);
    *out = summary.release();
  });
}

void cs_summary_free(cs_summary *summary) { delete summary; }

size_t cs_summary_count(const cs_summary *summary) {
  return summary == nullptr ? 0 : summary->result.summary.selected_positions.size();
}

size_t cs_summary_source_sentences(const cs_summary *summary) {
  return summary == nullptr ? 0 : summary->result.document.sentences.size();
}

size_t cs_summary_k(const cs_summary *summary) {
  return summary == nullptr ? 0 : summary->result.clustering.k;
}

size_t cs_summary_position(const cs_summary *summary, size_t index) {
  if (index >= cs_summary_count(summary)) return 0;
  return summary->result.summary.selected_positions[index];
}

const char *cs_summary_sentence(const cs_summary *summary, size_t index) {
  if (index >= cs_summary_count(summary)) return nullptr;
  return summary->result.summary.sentences[index].c_str();
}

double cs_summary_tfidf_score(const cs_summary *summary, size_t index) {
  if (index >= cs_summary_count(summary)) return 0;
  return summary->result.summary.scores[index].tfidf_score;
}

double cs_summary_title_score(const cs_summary *summary, size_t index) {
  if (index >= cs_summary_count(summary)) return 0;
  return summary->result.summary.scores[index].title_score;
}

const char *cs_summary_text(const cs_summary *summary) {
  return summary == nullptr ? "" : summary->result.summary.text.c_str();
}

const char *cs_summary_model_json(cs_summary *summary) {
  if (summary == nullptr) return "";
  if (!summary->model_json) summary->model_json = casesum::ModelToJson(summary->result.model);
  return summary->model_json->c_str();
}

const char *cs_summary_clustering_json(cs_summary *summary) {
  if (summary == nullptr) return "";
  if (!summary->clustering_json) {
    summary->clustering_json = casesum::ClusteringToJson(summary->result.clustering);
  }
  return summary->clustering_json->c_str();
}

cs_status cs_rouge_evaluate(const char *candidate, size_t candidate_length,
                            const char *reference, size_t reference_length, double alpha,
                            int stem, cs_rouge_report *out) {
  if (out == nullptr) return Fail(CS_ERR_INVALID_ARGUMENT, "out is NULL");
  if ((candidate == nullptr && candidate_length > 0) ||
      (reference == nullptr && reference_length > 0)) {
    return Fail(CS_ERR_INVALID_ARGUMENT, "text is NULL");
  }
  return Guard([&] {
    std::string_view c = candidate == nullptr ? std::string_view()
                                              : std::string_view(candidate, candidate_length);
    std::string_view r = reference == nullptr ? std::string_view()
                                              : std::string_view(reference, reference_length);
    casesum::RougeReport report = casesum::EvaluateAll(c, r, alpha, stem != 0);
    auto convert = [](const casesum::RougeScore &s) {
      return cs_rouge_score{s.precision, s.recall, s.f_measure};
    };
    out->rouge1 = convert(report.rouge1);
    out->rouge2 = convert(report.rouge2);
    out->rouge_l = convert(report.rouge_l);
    out->rouge_w = convert(report.rouge_w);
  });
}

}  // extern "C"

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

/*
 * casesum C API.
 *
 * Extractive summarization of legal case files (tf-idf sentence vectors,
 * k-means sentence clustering, per-cluster extraction) and ROUGE-1/2/L/W
 * evaluation. All strings are UTF-8. Objects are opaque and owned by the
 * caller once returned; release them with the matching *_free function.
 * Functions returning cs_status never throw; on failure the message for the
 * calling thread is available from cs_last_error().
 */
#ifndef CASESUM_CASESUM_H_
#define CASESUM_CASESUM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CASESUM_BUILDING_LIBRARY)
#define CASESUM_API __declspec(dllexport)
#else
#define CASESUM_API __declspec(dllimport)
#endif
#else
#define CASESUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
  CS_OK = 0,
  CS_ERR_EMPTY_DOCUMENT = 1,
  CS_ERR_INVALID_K = 2,
  CS_ERR_INVALID_ALPHA = 3,
  CS_ERR_INVALID_ARGUMENT = 4,
  CS_ERR_IO = 5,
  CS_ERR_INTERNAL = 6
} cs_status;

typedef struct cs_summary cs_summary;

typedef struct cs_summarize_options {
  const char *title;          /* NULL: first non-empty line of the text */
  size_t target_sentences;    /* default 150 */
  size_t k;                   /* 0: choose automatically */
  uint64_t seed;              /* default 42 */
  size_t max_iterations;      /* default 300 */
  double tolerance;           /* default 1e-6 */
  int normalize;              /* default 1 */
  double log_base;            /* idf logarithm base, default e */
  int elbow;                  /* with k == 0, pick k by the elbow method */
  const char *stopwords_path;       /* NULL: built-in list */
  const char *noun_exclusions_path; /* NULL: built-in lexicon */
} cs_summarize_options;

typedef struct cs_rouge_score {
  double precision;
  double recall;
  double f_measure;
} cs_rouge_score;

typedef struct cs_rouge_report {
  cs_rouge_score rouge1;
  cs_rouge_score rouge2;
  cs_rouge_score rouge_l;
  cs_rouge_score rouge_w;
} cs_rouge_report;

CASESUM_API const char *cs_version(void);
CASESUM_API const char *cs_status_name(cs_status status);
/* Detail for the last failed call on this thread, or "" if none. */
CASESUM_API const char *cs_last_error(void);

CASESUM_API void cs_summarize_options_init(cs_summarize_options *options);

/* Summarizes text[0, length). On success *out receives a new summary. */
CASESUM_API cs_status cs_summarize(const char *text, size_t length,
                                   const cs_summarize_options *options,
                                   cs_summary **out);
CASESUM_API void cs_summary_free(cs_summary *summary);

/* Number of selected sentences. */
CASESUM_API size_t cs_summary_count(const cs_summary *summary);
/* Sentence count of the source document after splitting. */
CASESUM_API size_t cs_summary_source_sentences(const cs_summary *summary);
/* Number of clusters actually used. */
CASESUM_API size_t cs_summary_k(const cs_summary *summary);
CASESUM_API size_t cs_summary_position(const cs_summary *summary, size_t index);
CASESUM_API const char *cs_summary_sentence(const cs_summary *summary, size_t index);
CASESUM_API double cs_summary_tfidf_score(const cs_summary *summary, size_t index);
CASESUM_API double cs_summary_title_score(const cs_summary *summary, size_t index);
/* Selected sentences joined by single spaces, without trailing newline. */
CASESUM_API const char *cs_summary_text(const cs_summary *summary);
/* Debug dumps; the strings live as long as the summary. */
CASESUM_API const char *cs_summary_model_json(cs_summary *summary);
CASESUM_API const char *cs_summary_clustering_json(cs_summary *summary);

/* Scores candidate against reference. alpha is the ROUGE-W weight exponent
 * (> 1); stem != 0 applies Porter stemming to both token streams. */
CASESUM_API cs_status cs_rouge_evaluate(const char *candidate, size_t candidate_length,
                                        const char *reference, size_t reference_length,
                                        double alpha, int stem, cs_rouge_report *out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* CASESUM_CASESUM_H_ */

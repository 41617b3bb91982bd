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

// Command-line front end: summarize a case file, score a summary against a
// reference, and build a side-by-side ROUGE comparison table.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casesum/casesum.h"

namespace {

constexpr int kExitIoError = 1;
constexpr int kExitUsage = 2;

using nlohmann::ordered_json;

struct IoFailure {
  std::string message;
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure{"cannot read " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoFailure{"error reading " + path};
  return buffer.str();
}

void WriteOutput(const std::string &path, const std::string &content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure{"cannot write " + path};
  out << content;
  if (!out) throw IoFailure{"error writing " + path};
}

std::string Percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value * 100.0);
  return buf;
}

std::string PadLeft(const std::string &s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string PadRight(const std::string &s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

struct Row {
  const char *name;
  cs_rouge_score cs_rouge_report::*field;
};

constexpr Row kRows[] = {
    {"ROUGE-1", &cs_rouge_report::rouge1},
    {"ROUGE-2", &cs_rouge_report::rouge2},
    {"ROUGE-L", &cs_rouge_report::rouge_l},
    {"ROUGE-W", &cs_rouge_report::rouge_w},
};

ordered_json ScoreJson(const cs_rouge_score &s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f_measure", s.f_measure}};
}

ordered_json ReportJson(const cs_rouge_report &report) {
  ordered_json j = ordered_json::object();
  for (const Row &row : kRows) j[row.name] = ScoreJson(report.*row.field);
  return j;
}

struct NamedReport {
  std::string name;
  std::string path;
  cs_rouge_report report;
};

// Aligned grid: one row per ROUGE variant, one P/R/F column triple per
// candidate.
std::string RenderTable(const std::vector<NamedReport> &reports) {
  const size_t metric_width = 9;
  const size_t cell = 10;
  std::string out;
  if (reports.size() > 1) {
    out += PadRight("", metric_width);
    for (const NamedReport &r : reports) {
      out += "  " + PadRight(r.name, 3 * cell + 2);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  out += PadRight("Metric", metric_width);
  for (size_t i = 0; i < reports.size(); ++i) {
    out += "  " + PadLeft("Precision", cell) + " " + PadLeft("Recall", cell) + " " +
           PadLeft("F-measure", cell);
  }
  out += "\n";
  for (const Row &row : kRows) {
    out += PadRight(row.name, metric_width);
    for (const NamedReport &r : reports) {
      const cs_rouge_score &s = r.report.*row.field;
      out += "  " + PadLeft(Percent(s.precision), cell) + " " + PadLeft(Percent(s.recall), cell) +
             " " + PadLeft(Percent(s.f_measure), cell);
    }
    out += "\n";
  }
  return out;
}

std::string RenderCsv(const std::vector<NamedReport> &reports) {
  std::string out = "metric";
  for (const NamedReport &r : reports) {
    if (reports.size() == 1) {
      out += ",precision,recall,f_measure";
    } else {
      out += "," + r.name + " precision," + r.name + " recall," + r.name + " f_measure";
    }
  }
  out += "\n";
  for (const Row &row : kRows) {
    out += row.name;
    for (const NamedReport &r : reports) {
      const cs_rouge_score &s = r.report.*row.field;
      out += "," + Percent(s.precision) + "," + Percent(s.recall) + "," + Percent(s.f_measure);
    }
    out += "\n";
  }
  return out;
}

cs_rouge_report Evaluate(const std::string &candidate, const std::string &reference,
                         double alpha, bool stem) {
  cs_rouge_report report;
  cs_status status = cs_rouge_evaluate(candidate.data(), candidate.size(), reference.data(),
                                       reference.size(), alpha, stem ? 1 : 0, &report);
  if (status != CS_OK) throw IoFailure{cs_last_error()};
  return report;
}

struct SummarizeArgs {
  std::string input;
  std::string title;
  bool has_title = false;
  size_t length = 150;
  size_t k = 0;
  uint64_t seed = 42;
  bool elbow = false;
  std::string format = "text";
  std::string output;
  std::string stopwords;
  std::string noun_exclusions;
  std::string dump_model;
  std::string dump_clusters;
};

int RunSummarize(const SummarizeArgs &args) {
  std::string text = ReadFile(args.input);

  cs_summarize_options options;
  cs_summarize_options_init(&options);
  options.title = args.has_title ? args.title.c_str() : nullptr;
  options.target_sentences = args.length;
  options.k = args.k;
  options.seed = args.seed;
  options.elbow = args.elbow ? 1 : 0;
  options.stopwords_path = args.stopwords.empty() ? nullptr : args.stopwords.c_str();
  options.noun_exclusions_path =
      args.noun_exclusions.empty() ? nullptr : args.noun_exclusions.c_str();

  cs_summary *summary = nullptr;
  cs_status status = cs_summarize(text.data(), text.size(), &options, &summary);
  if (status != CS_OK) {
    std::cerr << "casesum: " << args.input << ": " << cs_last_error() << "\n";
    return status == CS_ERR_INVALID_ARGUMENT || status == CS_ERR_INVALID_K ? kExitUsage
                                                                            : kExitIoError;
  }
  std::unique_ptr<cs_summary, decltype(&cs_summary_free)> owner(summary, cs_summary_free);

  std::string rendered;
  if (args.format == "json") {
    ordered_json j;
    j["positions"] = ordered_json::array();
    j["sentences"] = ordered_json::array();
    j["scores"] = ordered_json::array();
    for (size_t i = 0; i < cs_summary_count(summary); ++i) {
      size_t position = cs_summary_position(summary, i);
      j["positions"].push_back(position);
      j["sentences"].push_back(cs_summary_sentence(summary, i));
      j["scores"].push_back({{"position", position},
                             {"tfidf_score", cs_summary_tfidf_score(summary, i)},
                             {"title_score", cs_summary_title_score(summary, i)}});
    }
    rendered = j.dump(2) + "\n";
  } else {
    rendered = std::string(cs_summary_text(summary)) + "\n";
  }
  WriteOutput(args.output, rendered);
  if (!args.dump_model.empty()) {
    WriteOutput(args.dump_model, std::string(cs_summary_model_json(summary)) + "\n");
  }
  if (!args.dump_clusters.empty()) {
    WriteOutput(args.dump_clusters, std::string(cs_summary_clustering_json(summary)) + "\n");
  }
  return 0;
}

struct EvalArgs {
  std::string reference;
  std::vector<std::string> candidates;
  double alpha = 1.2;
  bool stem = false;
  std::string format = "text";
  std::string output;
};

std::string DisplayName(const std::string &path) {
  std::string name = std::filesystem::path(path).stem().string();
  return name.empty() ? path : name;
}

int RunEvaluate(const EvalArgs &args, bool comparison) {
  std::string reference = ReadFile(args.reference);
  std::vector<NamedReport> reports;
  for (const std::string &path : args.candidates) {
    std::string candidate = ReadFile(path);
    reports.push_back({DisplayName(path), path, Evaluate(candidate, reference, args.alpha,
                                                         args.stem)});
  }

  std::string rendered;
  if (args.format == "json") {
    ordered_json j;
    if (comparison) {
      j["reference"] = args.reference;
      j["candidates"] = ordered_json::array();
      for (const NamedReport &r : reports) {
        j["candidates"].push_back(
            {{"name", r.name}, {"path", r.path}, {"scores", ReportJson(r.report)}});
      }
    } else {
      j = ReportJson(reports.front().report);
    }
    rendered = j.dump(2) + "\n";
  } else if (args.format == "csv") {
    rendered = RenderCsv(reports);
  } else {
    rendered = RenderTable(reports);
  }
  WriteOutput(args.output, rendered);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Extractive summarizer for legal case files with ROUGE evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("casesum ") + cs_version());

  SummarizeArgs sargs;
  CLI::App *summarize = app.add_subcommand("summarize", "Summarize a plain-text case file");
  summarize->add_option("input", sargs.input, "Case file (UTF-8 text)")->required();
  CLI::Option *title_option = summarize->add_option("--title", sargs.title,
                        "Case title (default: first non-empty line of the input)");
  summarize->add_option("--length", sargs.length, "Target summary length in sentences")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  summarize->add_option("--k", sargs.k, "Number of clusters (default: automatic)")
      ->check(CLI::PositiveNumber);
  summarize->add_option("--seed", sargs.seed, "Seed for k-means++ initialization")
      ->capture_default_str();
  summarize->add_flag("--elbow", sargs.elbow, "Choose k with the elbow method");
  summarize->add_option("--format", sargs.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  summarize->add_option("--output", sargs.output, "Write output to PATH instead of stdout");
  summarize->add_option("--stopwords", sargs.stopwords, "Replacement stopword list")
      ->check(CLI::ExistingFile);
  summarize->add_option("--noun-exclusions", sargs.noun_exclusions,
                        "Replacement noun tagger exclusion lexicon")
      ->check(CLI::ExistingFile);
  summarize->add_option("--dump-model", sargs.dump_model, "Write the tf-idf model as JSON");
  summarize->add_option("--dump-clusters", sargs.dump_clusters, "Write the clustering as JSON");

  EvalArgs eargs;
  std::string candidate;
  CLI::App *evaluate = app.add_subcommand("evaluate", "Score a summary against a reference");
  evaluate->add_option("candidate", candidate, "Candidate summary")->required();
  evaluate->add_option("reference", eargs.reference, "Reference summary")->required();

  EvalArgs cargs;
  CLI::App *compare = app.add_subcommand("compare", "Compare several summaries to a reference");
  compare->add_option("reference", cargs.reference, "Reference summary")->required();
  compare->add_option("candidates", cargs.candidates, "Candidate summaries")->required();

  for (auto [sub, args] : {std::pair{evaluate, &eargs}, std::pair{compare, &cargs}}) {
    sub->add_option("--alpha", args->alpha, "ROUGE-W weight exponent (> 1)")
        ->check(CLI::Range(1.0, std::numeric_limits<double>::max()))
        ->capture_default_str();
    sub->add_flag("--stem", args->stem, "Stem tokens before scoring");
    sub->add_option("--format", args->format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--output", args->output, "Write output to PATH instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (summarize->parsed()) {
      sargs.has_title = title_option->count() > 0;
      return RunSummarize(sargs);
    }
    if (evaluate->parsed()) {
      if (!(eargs.alpha > 1.0)) {
        std::cerr << "casesum: --alpha must be greater than 1\n";
        return kExitUsage;
      }
      eargs.candidates = {candidate};
      return RunEvaluate(eargs, false);
    }
    if (!(cargs.alpha > 1.0)) {
      std::cerr << "casesum: --alpha must be greater than 1\n";
      return kExitUsage;
    }
    return RunEvaluate(cargs, true);
  } catch (const IoFailure &e) {
    std::cerr << "casesum: " << e.message << "\n";
    return kExitIoError;
  }
}

// Copyright 2026 The mrcheck Authors.
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

// mrcheck: audit, clean and score E2E-style data-to-text corpora.
//
//   mrcheck audit  --input train.csv [--out report.json]
//   mrcheck clean  --train T --dev D --test E --out DIR [--mode full]
//   mrcheck score  --outputs sys.txt --test test.csv [--out report.json]
//   mrcheck rerank --nbest nbest.tsv [--out selected.txt] [--report r.json]
//   mrcheck sample --input train.csv --n 200 --seed 1 [--out sheet.csv]
//   mrcheck sample --evaluate filled.csv
//
// Errors are printed to stderr as one JSON object per line. Exit status is
// 0 on success, 1 for invalid or empty input and 2 for I/O failures.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.h"

namespace {

void AddCommon(CLI::App* app, mrcheck::CommonOptions* common) {
  app->add_option("--config", common->config_path,
                  "Matcher config YAML (default: built-in)");
  app->add_flag("--ignore-eattype-restaurant",
                common->ignore_eattype_restaurant,
                "Do not count an unrealized eatType[restaurant] as missing");
  app->add_option("--jobs", common->jobs, "Worker threads")
      ->check(CLI::Range(1, 1024));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slot-level auditing, cleaning and scoring for E2E-style "
               "data-to-text corpora"};
  app.require_subcommand(1);

  mrcheck::AuditOptions audit;
  CLI::App* audit_cmd = app.add_subcommand("audit", "Match every instance");
  AddCommon(audit_cmd, &audit.common);
  audit_cmd->add_option("--input,input", audit.input, "Corpus CSV (mr,ref)")
      ->required();
  audit_cmd->add_option("--out", audit.report, "JSON report path");
  audit_cmd->add_flag("--json", audit.json, "Print the JSON report");

  mrcheck::CleanOptions clean;
  std::string clean_mode = "full";
  CLI::App* clean_cmd =
      app.add_subcommand("clean", "Correct MRs and remove test overlap");
  AddCommon(clean_cmd, &clean.common);
  clean_cmd->add_option("--train", clean.train)->required();
  clean_cmd->add_option("--dev", clean.dev)->required();
  clean_cmd->add_option("--test", clean.test)->required();
  clean_cmd->add_option("--out", clean.out_dir, "Output directory")
      ->required();
  clean_cmd->add_option("--mode", clean_mode, "full, missing or added")
      ->check(CLI::IsMember({"full", "missing", "added", "missing_only",
                             "added_only"}));

  mrcheck::ScoreOptions score;
  CLI::App* score_cmd =
      app.add_subcommand("score", "Word-overlap metrics and SER of outputs");
  AddCommon(score_cmd, &score.common);
  score_cmd->add_option("--outputs", score.outputs,
                        "System outputs: mr,output CSV or one line per MR")
      ->required();
  score_cmd->add_option("--test", score.test, "Test corpus CSV")->required();
  score_cmd->add_option("--out", score.report, "JSON report path");
  score_cmd->add_option("--label", score.label, "System name");
  score_cmd->add_flag("--per-item", score.per_item,
                      "Add per-item diagnostics to the report");

  mrcheck::RerankOptions rerank;
  CLI::App* rerank_cmd =
      app.add_subcommand("rerank", "Pick the lowest-SER candidate per MR");
  AddCommon(rerank_cmd, &rerank.common);
  rerank_cmd->add_option("--nbest,nbest", rerank.nbest,
                         "TSV: mr, then one candidate per column")
      ->required();
  rerank_cmd->add_option("--out", rerank.out, "Selections, one per line");
  rerank_cmd->add_option("--report", rerank.report, "JSON diagnostics");

  mrcheck::SampleOptions sample;
  uint64_t seed = 0;
  CLI::App* sample_cmd = app.add_subcommand(
      "sample", "Draw an annotation sheet or score a filled one");
  AddCommon(sample_cmd, &sample.common);
  sample_cmd->add_option("--input,input", sample.input,
                         "Corpus or outputs CSV");
  sample_cmd->add_option("--n", sample.n, "Sample size");
  CLI::Option* seed_opt = sample_cmd->add_option("--seed", seed);
  sample_cmd->add_option("--out", sample.out, "Sheet path");
  sample_cmd->add_option("--evaluate", sample.evaluate, "Filled sheet");
  sample_cmd->add_option("--report", sample.report, "JSON evaluation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string name;
  absl::Status status;
  if (*audit_cmd) {
    name = "audit";
    status = mrcheck::RunAudit(audit, std::cout);
  } else if (*clean_cmd) {
    name = "clean";
    clean.mode = *mrcheck::ParseCleaningMode(clean_mode);
    status = mrcheck::RunClean(clean, std::cout);
  } else if (*score_cmd) {
    name = "score";
    status = mrcheck::RunScore(score, std::cout);
  } else if (*rerank_cmd) {
    name = "rerank";
    status = mrcheck::RunRerank(rerank, std::cout);
  } else {
    name = "sample";
    if (*seed_opt) sample.seed = seed;
    if (sample.evaluate.empty() && sample.input.empty()) {
      std::cerr << "sample needs --input or --evaluate\n";
      return 1;
    }
    status = mrcheck::RunSample(sample, std::cout);
  }
  if (!status.ok()) {
    std::cerr << mrcheck::ErrorLine(name, status) << "\n";
  }
  return mrcheck::ExitCode(status);
}

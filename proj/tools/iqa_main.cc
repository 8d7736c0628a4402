// Copyright 2026 The IQA Toolkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "iqa/commands.h"
#include "iqa/dataset.h"
#include "iqa/saliency.h"

int main(int argc, char** argv) {
  CLI::App app{"Full-reference image quality assessment toolkit"};
  app.set_version_flag("--version", std::string(iqa::kToolVersion));
  app.require_subcommand(1);

  const std::map<std::string, iqa::SaliencyMethod> saliency_map{
      {"sr", iqa::SaliencyMethod::kSpectralResidual},
      {"pft", iqa::SaliencyMethod::kPhaseSpectrum}};
  const std::map<std::string, iqa::Metric> metric_map{{"gld", iqa::Metric::kGld},
                                                      {"psnr", iqa::Metric::kPsnr}};

  iqa::ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Quality distortion score of one pair");
  score_cmd->add_option("--ref", score.ref, "Reference image")->required();
  score_cmd->add_option("--test", score.test, "Test image")->required();
  score_cmd->add_option("--saliency", score.saliency, "Saliency model: sr or pft")
      ->transform(CLI::CheckedTransformer(saliency_map, CLI::ignore_case));

  iqa::ScoreArgs psnr;
  auto* psnr_cmd = app.add_subcommand("psnr", "PSNR of one pair after preprocessing");
  psnr_cmd->add_option("--ref", psnr.ref, "Reference image")->required();
  psnr_cmd->add_option("--test", psnr.test, "Test image")->required();

  iqa::EvalArgs eval;
  std::string eval_out;
  std::string eval_records;
  auto* eval_cmd = app.add_subcommand("eval", "Score and evaluate a benchmark manifest");
  eval_cmd->add_option("--manifest", eval.manifest, "Manifest CSV")->required();
  eval_cmd->add_option("--out", eval_out, "Report JSON path (stdout if omitted)");
  eval_cmd->add_option("--records", eval_records, "Per-image CSV path");
  eval_cmd->add_option("--saliency", eval.scoring.saliency, "Saliency model: sr or pft")
      ->transform(CLI::CheckedTransformer(saliency_map, CLI::ignore_case));
  eval_cmd->add_option("--metric", eval.scoring.metric, "Objective metric: gld or psnr")
      ->transform(CLI::CheckedTransformer(metric_map, CLI::ignore_case));
  eval_cmd->add_option("--jobs", eval.scoring.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  iqa::FTestArgs ftest;
  auto* ftest_cmd = app.add_subcommand("ftest", "Residual-variance F-test of two reports");
  ftest_cmd->add_option("--a", ftest.a, "First report JSON")->required();
  ftest_cmd->add_option("--b", ftest.b, "Second report JSON")->required();
  ftest_cmd->add_option("--confidence", ftest.confidence, "Confidence level")
      ->check(CLI::Range(0.5, 0.9999));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : iqa::kExitInputError;
  }

  if (*score_cmd) return iqa::RunScore(score, std::cout, std::cerr);
  if (*psnr_cmd) return iqa::RunPsnr(psnr, std::cout, std::cerr);
  if (*eval_cmd) {
    if (!eval_out.empty()) eval.out = eval_out;
    if (!eval_records.empty()) eval.records = eval_records;
    return iqa::RunEval(eval, std::cout, std::cerr);
  }
  return iqa::RunFTest(ftest, std::cout, std::cerr);
}

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


// Command implementations behind the `iqa` executable. Each returns the
// process exit code: 0 success, 2 invalid input, 3 empty or degenerate data.

#ifndef IQA_COMMANDS_H_
#define IQA_COMMANDS_H_

#include <filesystem>
#include <optional>
#include <ostream>

#include "iqa/dataset.h"
#include "iqa/error.h"
#include "iqa/saliency.h"

namespace iqa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDegenerate = 3;

int ExitCodeFor(ErrorCode code);

struct ScoreArgs {
  std::filesystem::path ref;
  std::filesystem::path test;
  SaliencyMethod saliency = SaliencyMethod::kSpectralResidual;
};

struct EvalArgs {
  std::filesystem::path manifest;
  std::optional<std::filesystem::path> out;      // report JSON; stdout if unset
  std::optional<std::filesystem::path> records;  // optional per-image CSV
  ScoringOptions scoring;
};

struct FTestArgs {
  std::filesystem::path a;
  std::filesystem::path b;
  double confidence = 0.95;
};

// Prints Q with six decimals.
int RunScore(const ScoreArgs& args, std::ostream& out, std::ostream& err);
int RunPsnr(const ScoreArgs& args, std::ostream& out, std::ostream& err);
int RunEval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int RunFTest(const FTestArgs& args, std::ostream& out, std::ostream& err);

// Current UTC time, ISO 8601 with a trailing Z.
std::string UtcTimestamp();

}  // namespace iqa

#endif  // IQA_COMMANDS_H_

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


#include "iqa/commands.h"

#include <ctime>
#include <exception>
#include <iomanip>
#include <sstream>
#include <string>

#include "iqa/distortion.h"
#include "iqa/image.h"

namespace iqa {

namespace {

template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

std::string Optional(const std::optional<double>& v) {
  if (!v) return "-";
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << *v;
  return s.str();
}

void PrintSummary(const EvalReport& report, std::ostream& out) {
  out << std::fixed << std::setprecision(4);
  out << std::left << std::setw(16) << "database" << std::right << std::setw(6) << "n"
      << std::setw(9) << "SROCC" << std::setw(9) << "KROCC" << std::setw(9) << "PLCC"
      << std::setw(9) << "MAE" << std::setw(9) << "RMSE" << '\n';
  auto row = [&](const std::string& name, const MetricRow& r) {
    out << std::left << std::setw(16) << name << std::right << std::setw(6) << r.n
        << std::setw(9) << r.srocc << std::setw(9) << r.krocc << std::setw(9) << r.plcc
        << std::setw(9) << Optional(r.mae) << std::setw(9) << Optional(r.rmse) << '\n';
  };
  for (const DatabaseReport& d : report.per_database) row(d.database, d.metrics);
  row("average", report.averages.direct);
  row("weighted", report.averages.weighted);
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateSaliency:
    case ErrorCode::kDegenerateSeries:
      return kExitDegenerate;
    default:
      return kExitInputError;
  }
}

std::string UtcTimestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int RunScore(const ScoreArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const QualityRecord r = ScorePair(LoadPair(args.ref, args.test), args.saliency);
    out << std::fixed << std::setprecision(6) << r.q << '\n';
    return kExitOk;
  });
}

int RunPsnr(const ScoreArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    out << std::fixed << std::setprecision(6) << Psnr(LoadPair(args.ref, args.test))
        << '\n';
    return kExitOk;
  });
}

int RunEval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Manifest manifest = LoadManifest(args.manifest);
    for (const std::string& w : manifest.warnings) err << "warning: " << w << '\n';
    if (!manifest.warnings.empty()) {
      err << "warning: skipped " << manifest.warnings.size() << " unreadable row(s)\n";
    }
    EvalReport report = EvaluateManifest(manifest, args.scoring);
    report.timestamp = UtcTimestamp();
    if (args.records) WriteRecordsCsv(*args.records, report);
    if (args.out) {
      WriteReport(*args.out, report);
      PrintSummary(report, out);
    } else {
      out << ReportToJson(report).dump(2) << '\n';
    }
    return kExitOk;
  });
}

int RunFTest(const FTestArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (!(args.confidence > 0.0 && args.confidence < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "confidence must lie in (0, 1)");
    }
    const FTestComparison cmp =
        CompareReports(LoadReport(args.a), LoadReport(args.b), args.confidence);
    out << std::left << std::setw(16) << "database" << std::right << std::setw(6) << "n"
        << std::setw(14) << "var_a" << std::setw(14) << "var_b" << std::setw(10)
        << "F_crit" << std::setw(9) << "verdict" << '\n';
    for (const FTestCell& c : cmp.cells) {
      out << std::left << std::setw(16) << c.database << std::right << std::setw(6) << c.n
          << std::scientific << std::setprecision(5) << std::setw(14) << c.variance_a
          << std::setw(14) << c.variance_b << std::fixed << std::setprecision(4)
          << std::setw(10) << c.critical << std::setw(9) << std::showpos << c.verdict
          << std::noshowpos << '\n';
    }
    out << "improvement: " << std::fixed << std::setprecision(2)
        << cmp.improvement_percent << "%\n";
    return kExitOk;
  });
}

}  // namespace iqa

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

// Benchmark manifests, batch scoring and evaluation reports.
//
// Manifest: UTF-8 CSV with the exact header
//   ref_path,test_path,subjective,subjective_kind,distortion,database
// subjective_kind is MOS or DMOS. Fields are never quoted; a path holding a
// comma makes its row malformed. Relative paths resolve against the
// manifest's directory.

#ifndef IQA_DATASET_H_
#define IQA_DATASET_H_

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "iqa/distortion.h"
#include "iqa/evaluation.h"
#include "iqa/saliency.h"
#include "json.hpp"

namespace iqa {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kManifestHeader =
    "ref_path,test_path,subjective,subjective_kind,distortion,database";

enum class SubjectiveKind { kMos, kDmos };
std::string_view SubjectiveKindName(SubjectiveKind kind);

struct ManifestEntry {
  std::filesystem::path ref_path;
  std::filesystem::path test_path;
  double subjective = 0.0;
  SubjectiveKind subjective_kind = SubjectiveKind::kDmos;
  std::string distortion;
  std::string database;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  // Rows dropped because an image path was unreadable, one message each.
  std::vector<std::string> warnings;
};

// Throws kParseError (message names the line) for a bad header or malformed
// row, kIoError if the manifest itself cannot be opened.
Manifest ParseManifest(std::istream& in, const std::filesystem::path& base_dir);
Manifest LoadManifest(const std::filesystem::path& path);

enum class Metric { kGld, kPsnr };
std::string_view MetricName(Metric metric);  // "gld" / "psnr"
Metric ParseMetric(std::string_view name);

struct ScoringOptions {
  Metric metric = Metric::kGld;
  SaliencyMethod saliency = SaliencyMethod::kSpectralResidual;
  int jobs = 1;
};

// Scores every entry on `jobs` worker threads. Output order follows the
// manifest; numbers do not depend on the worker count.
std::vector<QualityRecord> ScoreManifest(const Manifest& manifest,
                                         const ScoringOptions& options);

// One scored image inside a report.
struct ReportRecord {
  std::string database;
  std::string distortion;
  std::string ref;
  std::string test;
  double subjective = 0.0;
  SubjectiveKind subjective_kind = SubjectiveKind::kDmos;
  double q = 0.0;
  double mapped = 0.0;
  double residual = 0.0;  // subjective - mapped

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

struct DatabaseReport {
  std::string database;
  MetricRow metrics;
  double srocc_signed = 0.0;
  double krocc_signed = 0.0;
  double plcc_signed = 0.0;
  LogisticFit fit;

  friend bool operator==(const DatabaseReport& a, const DatabaseReport& b) {
    return a.database == b.database && a.metrics == b.metrics &&
           a.srocc_signed == b.srocc_signed && a.krocc_signed == b.krocc_signed &&
           a.plcc_signed == b.plcc_signed && a.fit.beta == b.fit.beta &&
           a.fit.converged == b.fit.converged &&
           a.fit.residual_sse == b.fit.residual_sse;
  }
};

struct DistortionReport {
  std::string database;
  DistortionRow row;

  friend bool operator==(const DistortionReport&, const DistortionReport&) = default;
};

struct EvalReport {
  std::string tool_version;
  std::string metric;
  std::string saliency_method;
  std::string timestamp;
  std::vector<DatabaseReport> per_database;      // sorted by database
  std::vector<DistortionReport> per_distortion;  // sorted by database, label
  Averages averages;
  std::vector<ReportRecord> records;  // sorted by database, ref, test

  friend bool operator==(const EvalReport& a, const EvalReport& b) {
    return a.tool_version == b.tool_version && a.metric == b.metric &&
           a.saliency_method == b.saliency_method && a.timestamp == b.timestamp &&
           a.per_database == b.per_database && a.per_distortion == b.per_distortion &&
           a.averages.direct == b.averages.direct &&
           a.averages.weighted == b.averages.weighted && a.records == b.records;
  }
};

// scores[i] belongs to manifest.entries[i]. Groups by database and
// distortion and runs the full metric set; the result does not depend on
// row order. Throws kDegenerateSeries when there are no entries or a
// database has fewer than kMinGroupSize of them. The timestamp is left
// empty.
EvalReport Evaluate(const Manifest& manifest, const std::vector<QualityRecord>& scores,
                    const ScoringOptions& options);

// ScoreManifest followed by Evaluate.
EvalReport EvaluateManifest(const Manifest& manifest, const ScoringOptions& options);

nlohmann::json ReportToJson(const EvalReport& report);
EvalReport ReportFromJson(const nlohmann::json& json);
void WriteReport(const std::filesystem::path& path, const EvalReport& report);
EvalReport LoadReport(const std::filesystem::path& path);
// Flat per-image CSV for downstream analysis.
void WriteRecordsCsv(const std::filesystem::path& path, const EvalReport& report);

struct FTestCell {
  std::string database;
  std::size_t n = 0;
  double variance_a = 0.0;
  double variance_b = 0.0;
  double critical = 0.0;
  int verdict = 0;  // +1: a significantly better (smaller residual variance)
};

struct FTestComparison {
  std::vector<FTestCell> cells;
  double improvement_percent = 0.0;  // share of cells with verdict +1
};

// Throws kIncompatibleReports unless both reports scored the same images
// per database.
FTestComparison CompareReports(const EvalReport& a, const EvalReport& b,
                               double confidence = 0.95);

}  // namespace iqa

#endif  // IQA_DATASET_H_

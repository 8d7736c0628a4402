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


#include "iqa/dataset.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "iqa/error.h"
#include "iqa/image.h"
#include "test_support.h"

namespace iqa {
namespace {

using testing::TempDir;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no iqa::Error thrown";
  return ErrorCode::kInvalidArgument;
}

std::string Header() { return std::string(kManifestHeader) + "\n"; }

// Writes a small reference image plus `count` noisy versions of increasing
// strength and returns manifest text over them.
std::string WriteNoiseSet(const TempDir& dir, const std::string& db, int count,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ScalarField2D ref(40, 32);
  for (int y = 0; y < 32; ++y) {
    for (int x = 0; x < 40; ++x) {
      ref.at(x, y) = 0.5 + 0.3 * std::sin(x * 0.3 + seed) * std::cos(y * 0.2);
    }
  }
  const std::string ref_name = db + "_ref.png";
  WritePng(dir / ref_name, RasterFromField(ref));
  std::ostringstream rows;
  for (int i = 0; i < count; ++i) {
    const std::string name = db + "_t" + std::to_string(i) + ".png";
    WritePng(dir / name,
             RasterFromField(testing::AddGaussianNoise(ref, 0.01 * (i + 1), seed + i)));
    rows << ref_name << ',' << name << ',' << 10.0 * (i + 1) << ",DMOS,"
         << (i % 2 ? "noise" : "awgn") << ',' << db << '\n';
  }
  return rows.str();
}

std::filesystem::path WriteManifest(const TempDir& dir, const std::string& body) {
  const auto path = dir / "manifest.csv";
  std::ofstream(path) << Header() << body;
  return path;
}

ManifestEntry Entry(const std::string& id, double s, const std::string& dist,
                    const std::string& db) {
  return {"/r/" + id, "/t/" + id, s, SubjectiveKind::kMos, dist, db};
}

Manifest SyntheticManifest(std::vector<QualityRecord>* scores, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0.0, 1.0);
  Manifest m;
  for (int db = 0; db < 2; ++db) {
    const int n = db == 0 ? 12 : 30;
    for (int i = 0; i < n; ++i) {
      const double q = std::uniform_real_distribution<double>(0, 100)(rng);
      m.entries.push_back(Entry(std::to_string(db) + "_" + std::to_string(i),
                                80 - 0.5 * q + 5 * z(rng), i % 3 ? "blur" : "jpeg",
                                db ? "beta" : "alpha"));
      QualityRecord r;
      r.q = q;
      scores->push_back(r);
    }
  }
  return m;
}

TEST(ManifestTest, HeaderOnlyIsEmpty) {
  std::istringstream in(Header());
  const Manifest m = ParseManifest(in, "/");
  EXPECT_TRUE(m.entries.empty());
  EXPECT_TRUE(m.warnings.empty());
}

TEST(ManifestTest, OneValidRowRoundTrips) {
  TempDir dir;
  WritePng(dir / "a.png", RasterFromField(ScalarField2D(4, 4, 0.5)));
  WritePng(dir / "b.png", RasterFromField(ScalarField2D(4, 4, 0.4)));
  std::istringstream in(Header() + "a.png," + (dir / "b.png").string() +
                        ",3.25,MOS,gblur,TID2008\r\n");
  const Manifest m = ParseManifest(in, dir.path());
  ASSERT_EQ(m.entries.size(), 1u);
  const ManifestEntry& e = m.entries[0];
  EXPECT_EQ(e.ref_path, dir / "a.png");
  EXPECT_EQ(e.test_path, dir / "b.png");
  EXPECT_EQ(e.subjective, 3.25);
  EXPECT_EQ(e.subjective_kind, SubjectiveKind::kMos);
  EXPECT_EQ(e.distortion, "gblur");
  EXPECT_EQ(e.database, "TID2008");
}

TEST(ManifestTest, ShortRowNamesTheLine) {
  std::istringstream in(Header() + "\na.png,b.png,1,DMOS\n");
  try {
    ParseManifest(in, "/");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ManifestTest, MalformedInputs) {
  const std::string cases[] = {
      "ref,test,subjective\n",
      Header() + "a.png,b.png,abc,DMOS,x,y\n",
      Header() + "a.png,b.png,1,SCORE,x,y\n",
      Header() + "a.png,b.png,1,DMOS,,y\n",
      Header() + "a.png,b.png,1,DMOS,x,y,z\n",
      Header() + "a.png,b.png,nan,DMOS,x,y\n",
      Header() + "\"a,1.png\",b.png,1,DMOS,x,y\n",
      "",
  };
  for (const std::string& text : cases) {
    std::istringstream in(text);
    EXPECT_EQ(CodeOf([&] { ParseManifest(in, "/"); }), ErrorCode::kParseError) << text;
  }
}

TEST(ManifestTest, UnreadableRowsAreSkippedWithWarnings) {
  TempDir dir;
  WritePng(dir / "a.png", RasterFromField(ScalarField2D(4, 4, 0.5)));
  std::istringstream in(Header() + "a.png,a.png,1,DMOS,x,y\n" +
                        "a.png,missing.png,2,DMOS,x,y\n" + "gone.png,a.png,3,dmos,x,y\n");
  const Manifest m = ParseManifest(in, dir.path());
  EXPECT_EQ(m.entries.size(), 1u);
  ASSERT_EQ(m.warnings.size(), 2u);
  EXPECT_NE(m.warnings[0].find("line 3"), std::string::npos);
}

TEST(ManifestTest, MissingFileIsIoError) {
  EXPECT_EQ(CodeOf([] { LoadManifest("/nonexistent/manifest.csv"); }), ErrorCode::kIoError);
}

TEST(EvaluateTest, EmptyManifestIsDegenerate) {
  EXPECT_EQ(CodeOf([] { EvaluateManifest(Manifest{}, {}); }), ErrorCode::kDegenerateSeries);
}

TEST(EvaluateTest, SmallDatabaseIsDegenerate) {
  Manifest m;
  std::vector<QualityRecord> scores(3);
  for (int i = 0; i < 3; ++i) {
    m.entries.push_back(Entry(std::to_string(i), i, "d", "tiny"));
    scores[i].q = i;
  }
  EXPECT_EQ(CodeOf([&] { Evaluate(m, scores, {}); }), ErrorCode::kDegenerateSeries);
}

TEST(EvaluateTest, MonotoneSubjectiveGivesPerfectRankScores) {
  Manifest m;
  std::vector<QualityRecord> scores;
  for (int i = 0; i < 10; ++i) {
    m.entries.push_back(Entry(std::to_string(i), 5.0 - 0.3 * i, "d", "db"));
    QualityRecord r;
    r.q = std::exp(0.2 * i);
    scores.push_back(r);
  }
  const EvalReport report = Evaluate(m, scores, {});
  ASSERT_EQ(report.per_database.size(), 1u);
  EXPECT_DOUBLE_EQ(report.per_database[0].metrics.srocc, 1.0);
  EXPECT_DOUBLE_EQ(report.per_database[0].metrics.krocc, 1.0);
  EXPECT_LT(report.per_database[0].srocc_signed, 0.0);
  EXPECT_EQ(report.metric, "gld");
  EXPECT_EQ(report.saliency_method, "sr");
  EXPECT_EQ(report.tool_version, kToolVersion);
}

TEST(EvaluateTest, GroupsAndAverages) {
  std::vector<QualityRecord> scores;
  const Manifest m = SyntheticManifest(&scores, 81);
  const EvalReport report = Evaluate(m, scores, {});
  ASSERT_EQ(report.per_database.size(), 2u);
  EXPECT_EQ(report.per_database[0].database, "alpha");
  EXPECT_EQ(report.per_database[0].metrics.n, 12u);
  EXPECT_EQ(report.per_database[1].metrics.n, 30u);
  ASSERT_EQ(report.per_distortion.size(), 4u);
  EXPECT_EQ(report.per_distortion[0].database, "alpha");
  EXPECT_EQ(report.per_distortion[0].row.label, "blur");
  const auto& a = report.per_database[0].metrics;
  const auto& b = report.per_database[1].metrics;
  EXPECT_NEAR(report.averages.direct.srocc, (a.srocc + b.srocc) / 2, 1e-15);
  EXPECT_NEAR(report.averages.weighted.plcc, (12 * a.plcc + 30 * b.plcc) / 42, 1e-15);
  ASSERT_EQ(report.records.size(), 42u);
  for (const ReportRecord& r : report.records) {
    EXPECT_DOUBLE_EQ(r.residual, r.subjective - r.mapped);
  }
}

TEST(EvaluateTest, RowOrderDoesNotMatter) {
  std::vector<QualityRecord> scores;
  Manifest m = SyntheticManifest(&scores, 82);
  const EvalReport base = Evaluate(m, scores, {});
  std::vector<std::size_t> order(m.entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), std::mt19937_64(83));
  Manifest permuted;
  std::vector<QualityRecord> permuted_scores;
  for (std::size_t i : order) {
    permuted.entries.push_back(m.entries[i]);
    permuted_scores.push_back(scores[i]);
  }
  EXPECT_EQ(Evaluate(permuted, permuted_scores, {}), base);
}

TEST(ReportTest, JsonRoundTrip) {
  std::vector<QualityRecord> scores;
  const Manifest m = SyntheticManifest(&scores, 84);
  EvalReport report = Evaluate(m, scores, {});
  report.timestamp = "2026-01-01T00:00:00Z";
  TempDir dir;
  WriteReport(dir / "r.json", report);
  EXPECT_EQ(LoadReport(dir / "r.json"), report);
  EXPECT_EQ(ReportFromJson(ReportToJson(report)), report);
}

TEST(ReportTest, MalformedJson) {
  TempDir dir;
  std::ofstream(dir / "bad.json") << "{ not json";
  EXPECT_EQ(CodeOf([&] { LoadReport(dir / "bad.json"); }), ErrorCode::kParseError);
  std::ofstream(dir / "partial.json") << "{\"metric\": \"gld\"}";
  EXPECT_EQ(CodeOf([&] { LoadReport(dir / "partial.json"); }), ErrorCode::kParseError);
}

TEST(ReportTest, RecordsCsv) {
  std::vector<QualityRecord> scores;
  const Manifest m = SyntheticManifest(&scores, 85);
  const EvalReport report = Evaluate(m, scores, {});
  TempDir dir;
  WriteRecordsCsv(dir / "records.csv", report);
  std::ifstream in(dir / "records.csv");
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "database,distortion,ref,test,subjective,subjective_kind,q,mapped,residual");
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
    ++rows;
  }
  EXPECT_EQ(rows, 42);
}

TEST(ScoreManifestTest, ScoresRealImagesDeterministically) {
  TempDir dir;
  const auto path = WriteManifest(dir, WriteNoiseSet(dir, "one", 6, 1) +
                                           WriteNoiseSet(dir, "two", 5, 2));
  const Manifest m = LoadManifest(path);
  ASSERT_EQ(m.entries.size(), 11u);
  ScoringOptions serial;
  ScoringOptions parallel;
  parallel.jobs = 4;
  const auto a = ScoreManifest(m, serial);
  const auto b = ScoreManifest(m, parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].q, b[i].q);
    EXPECT_GT(a[i].q, 0.0);
    EXPECT_EQ(a[i].database_label, m.entries[i].database);
  }
  EXPECT_EQ(EvaluateManifest(m, serial), EvaluateManifest(m, parallel));
}

TEST(ScoreManifestTest, NoiseLevelsRankPerfectly) {
  TempDir dir;
  const Manifest m = LoadManifest(WriteManifest(dir, WriteNoiseSet(dir, "db", 6, 3)));
  for (Metric metric : {Metric::kGld, Metric::kPsnr}) {
    ScoringOptions o;
    o.metric = metric;
    const EvalReport r = EvaluateManifest(m, o);
    EXPECT_DOUBLE_EQ(r.per_database[0].metrics.srocc, 1.0) << MetricName(metric);
    EXPECT_EQ(r.metric, MetricName(metric));
  }
}

TEST(ScoreManifestTest, MismatchedPairPropagates) {
  TempDir dir;
  WritePng(dir / "a.png", RasterFromField(ScalarField2D(8, 8, 0.5)));
  WritePng(dir / "b.png", RasterFromField(ScalarField2D(9, 8, 0.5)));
  const Manifest m = LoadManifest(WriteManifest(dir, "a.png,b.png,1,DMOS,x,y\n"));
  EXPECT_EQ(CodeOf([&] { ScoreManifest(m, {}); }), ErrorCode::kPairMismatch);
}

EvalReport WithResiduals(const std::vector<double>& residuals, const std::string& db) {
  EvalReport r;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    ReportRecord rec;
    rec.database = db;
    rec.ref = "r" + std::to_string(i);
    rec.test = "t" + std::to_string(i);
    rec.residual = residuals[i];
    r.records.push_back(rec);
  }
  return r;
}

TEST(CompareReportsTest, SelfComparisonIsNeutral) {
  std::vector<QualityRecord> scores;
  const Manifest m = SyntheticManifest(&scores, 86);
  const EvalReport report = Evaluate(m, scores, {});
  const FTestComparison c = CompareReports(report, report);
  ASSERT_EQ(c.cells.size(), 2u);
  for (const FTestCell& cell : c.cells) EXPECT_EQ(cell.verdict, 0);
  EXPECT_EQ(c.improvement_percent, 0.0);
}

TEST(CompareReportsTest, VarianceGapAndAntisymmetry) {
  std::mt19937_64 rng(87);
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<double> big(100), small(100);
  for (int i = 0; i < 100; ++i) {
    big[i] = z(rng);
    small[i] = big[i] / std::sqrt(10.0);
  }
  const EvalReport a = WithResiduals(small, "db");
  const EvalReport b = WithResiduals(big, "db");
  const FTestComparison ab = CompareReports(a, b);
  const FTestComparison ba = CompareReports(b, a);
  ASSERT_EQ(ab.cells.size(), 1u);
  EXPECT_EQ(ab.cells[0].verdict, 1);
  EXPECT_EQ(ba.cells[0].verdict, -1);
  EXPECT_EQ(ab.cells[0].n, 100u);
  EXPECT_NEAR(ab.cells[0].critical, 1.39, 0.005);
  EXPECT_EQ(ab.improvement_percent, 100.0);
  EXPECT_EQ(ba.improvement_percent, 0.0);
}

TEST(CompareReportsTest, IncompatibleRecordSets) {
  const EvalReport a = WithResiduals({1, 2, 3, 4}, "db");
  const EvalReport fewer = WithResiduals({1, 2, 3}, "db");
  const EvalReport other_db = WithResiduals({1, 2, 3, 4}, "xx");
  EvalReport renamed = a;
  renamed.records[2].test = "elsewhere";
  for (const EvalReport* b : std::vector<const EvalReport*>{&fewer, &other_db, &renamed}) {
    EXPECT_EQ(CodeOf([&] { CompareReports(a, *b); }), ErrorCode::kIncompatibleReports);
  }
}

TEST(MetricTest, Names) {
  EXPECT_EQ(ParseMetric("psnr"), Metric::kPsnr);
  EXPECT_EQ(MetricName(Metric::kGld), "gld");
  EXPECT_THROW(ParseMetric("ssim"), Error);
  EXPECT_EQ(SubjectiveKindName(SubjectiveKind::kDmos), "DMOS");
}

}  // namespace
}  // namespace iqa

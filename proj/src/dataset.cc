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
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "iqa/error.h"
#include "iqa/image.h"

namespace iqa {

namespace {

[[noreturn]] void ParseFail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::kParseError,
              "manifest line " + std::to_string(line) + ": " + why);
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool Readable(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return static_cast<bool>(in);
}

auto RecordKey(const ReportRecord& r) {
  return std::tie(r.database, r.ref, r.test, r.distortion, r.subjective, r.q);
}

SubjectiveKind ParseKind(const std::string& s) {
  if (s == "mos") return SubjectiveKind::kMos;
  if (s == "dmos") return SubjectiveKind::kDmos;
  throw Error(ErrorCode::kParseError, "unknown subjective kind '" + s + "'");
}

nlohmann::json OptionalJson(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> OptionalFromJson(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

nlohmann::json RowToJson(const MetricRow& row) {
  return {{"srocc", row.srocc}, {"krocc", row.krocc},       {"plcc", row.plcc},
          {"mae", OptionalJson(row.mae)}, {"rmse", OptionalJson(row.rmse)},
          {"n", row.n}};
}

MetricRow RowFromJson(const nlohmann::json& j) {
  MetricRow row;
  row.srocc = j.at("srocc").get<double>();
  row.krocc = j.at("krocc").get<double>();
  row.plcc = j.at("plcc").get<double>();
  row.mae = OptionalFromJson(j.at("mae"));
  row.rmse = OptionalFromJson(j.at("rmse"));
  row.n = j.at("n").get<std::size_t>();
  return row;
}

}  // namespace

std::string_view SubjectiveKindName(SubjectiveKind kind) {
  return kind == SubjectiveKind::kMos ? "MOS" : "DMOS";
}

std::string_view MetricName(Metric metric) {
  return metric == Metric::kGld ? "gld" : "psnr";
}

Metric ParseMetric(std::string_view name) {
  if (name == "gld") return Metric::kGld;
  if (name == "psnr") return Metric::kPsnr;
  throw Error(ErrorCode::kInvalidArgument, "unknown metric '" + std::string(name) + "'");
}

Manifest ParseManifest(std::istream& in, const std::filesystem::path& base_dir) {
  Manifest manifest;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (Trim(line).empty()) continue;
    if (!header_seen) {
      if (Trim(line) != kManifestHeader) {
        ParseFail(line_no, "expected header '" + std::string(kManifestHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = SplitCommas(line);
    if (fields.size() != 6) {
      ParseFail(line_no, "expected 6 fields, found " + std::to_string(fields.size()));
    }
    std::array<std::string_view, 6> f;
    for (std::size_t i = 0; i < 6; ++i) {
      f[i] = Trim(fields[i]);
      if (f[i].empty()) ParseFail(line_no, "field " + std::to_string(i + 1) + " is empty");
      if (f[i].find('"') != std::string_view::npos) {
        ParseFail(line_no, "quoted fields are not supported");
      }
    }
    ManifestEntry e;
    const auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(),
                                           e.subjective);
    if (ec != std::errc() || ptr != f[2].data() + f[2].size() ||
        !std::isfinite(e.subjective)) {
      ParseFail(line_no, "subjective score '" + std::string(f[2]) + "' is not a finite number");
    }
    try {
      e.subjective_kind = ParseKind(Lower(f[3]));
    } catch (const Error& err) {
      ParseFail(line_no, err.what());
    }
    auto resolve = [&](std::string_view p) {
      std::filesystem::path path{std::string(p)};
      return path.is_absolute() ? path : base_dir / path;
    };
    e.ref_path = resolve(f[0]);
    e.test_path = resolve(f[1]);
    e.distortion = std::string(f[4]);
    e.database = std::string(f[5]);
    bool ok = true;
    for (const auto* p : {&e.ref_path, &e.test_path}) {
      if (!Readable(*p)) {
        manifest.warnings.push_back("line " + std::to_string(line_no) +
                                    ": unreadable image " + p->string());
        ok = false;
        break;
      }
    }
    if (ok) manifest.entries.push_back(std::move(e));
  }
  if (!header_seen) ParseFail(line_no == 0 ? 1 : line_no, "missing header");
  return manifest;
}

Manifest LoadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open manifest " + path.string());
  return ParseManifest(in, path.parent_path());
}

std::vector<QualityRecord> ScoreManifest(const Manifest& manifest,
                                         const ScoringOptions& options) {
  const std::size_t n = manifest.entries.size();
  std::vector<QualityRecord> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const ManifestEntry& e = manifest.entries[i];
      try {
        const ImagePair pair = LoadPair(e.ref_path, e.test_path);
        QualityRecord r;
        if (options.metric == Metric::kGld) {
          r = ScorePair(pair, options.saliency);
        } else {
          r.q = Psnr(pair);
        }
        r.saliency_method = options.saliency;
        r.ref_id = e.ref_path.generic_string();
        r.test_id = e.test_path.generic_string();
        r.subjective = e.subjective;
        r.distortion_label = e.distortion;
        r.database_label = e.database;
        out[i] = std::move(r);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(1, options.jobs)), n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return out;
}

EvalReport Evaluate(const Manifest& manifest, const std::vector<QualityRecord>& scores,
                    const ScoringOptions& options) {
  if (scores.size() != manifest.entries.size()) {
    throw Error(ErrorCode::kInvalidArgument, "score count does not match manifest");
  }
  if (manifest.entries.empty()) {
    throw Error(ErrorCode::kDegenerateSeries, "empty manifest, nothing to evaluate");
  }
  EvalReport report;
  report.tool_version = std::string(kToolVersion);
  report.metric = std::string(MetricName(options.metric));
  report.saliency_method =
      options.metric == Metric::kGld ? std::string(SaliencyMethodName(options.saliency)) : "";

  for (std::size_t i = 0; i < scores.size(); ++i) {
    const ManifestEntry& e = manifest.entries[i];
    ReportRecord r;
    r.database = e.database;
    r.distortion = e.distortion;
    r.ref = e.ref_path.generic_string();
    r.test = e.test_path.generic_string();
    r.subjective = e.subjective;
    r.subjective_kind = e.subjective_kind;
    r.q = scores[i].q;
    report.records.push_back(std::move(r));
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const ReportRecord& a, const ReportRecord& b) {
              return RecordKey(a) < RecordKey(b);
            });

  std::vector<MetricRow> rows;
  auto begin = report.records.begin();
  while (begin != report.records.end()) {
    const std::string database = begin->database;
    auto end = std::find_if(begin, report.records.end(),
                            [&](const ReportRecord& r) { return r.database != database; });
    const auto count = static_cast<std::size_t>(end - begin);
    if (count < kMinGroupSize) {
      throw Error(ErrorCode::kDegenerateSeries,
                  "database '" + database + "' has " + std::to_string(count) +
                      " records; at least " + std::to_string(kMinGroupSize) +
                      " are needed");
    }
    ScoreSeries series;
    std::vector<QualityRecord> group;
    for (auto it = begin; it != end; ++it) {
      series.objective.push_back(it->q);
      series.subjective.push_back(it->subjective);
      series.labels.push_back(it->distortion);
      QualityRecord q;
      q.q = it->q;
      q.subjective = it->subjective;
      q.distortion_label = it->distortion;
      q.database_label = it->database;
      group.push_back(std::move(q));
    }
    SeriesEvaluation ev;
    try {
      ev = EvaluateSeries(series);
    } catch (const Error& e) {
      throw Error(e.code(), "database '" + database + "': " + e.what());
    }
    for (std::size_t i = 0; i < count; ++i) {
      (begin + i)->mapped = ev.mapped[i];
      (begin + i)->residual = ev.residuals[i];
    }
    report.per_database.push_back({database, ev.row, ev.srocc_signed, ev.krocc_signed,
                                   ev.plcc_signed, ev.fit});
    for (DistortionRow& d : GroupByDistortion(group)) {
      report.per_distortion.push_back({database, std::move(d)});
    }
    rows.push_back(ev.row);
    begin = end;
  }
  report.averages = Aggregate(rows);
  return report;
}

EvalReport EvaluateManifest(const Manifest& manifest, const ScoringOptions& options) {
  if (manifest.entries.empty()) {
    throw Error(ErrorCode::kDegenerateSeries, "empty manifest, nothing to evaluate");
  }
  return Evaluate(manifest, ScoreManifest(manifest, options), options);
}

nlohmann::json ReportToJson(const EvalReport& report) {
  nlohmann::json j;
  j["tool_version"] = report.tool_version;
  j["metric"] = report.metric;
  j["saliency_method"] = report.saliency_method;
  j["timestamp"] = report.timestamp;
  j["per_database"] = nlohmann::json::array();
  for (const DatabaseReport& d : report.per_database) {
    nlohmann::json row = RowToJson(d.metrics);
    row["database"] = d.database;
    row["srocc_signed"] = d.srocc_signed;
    row["krocc_signed"] = d.krocc_signed;
    row["plcc_signed"] = d.plcc_signed;
    row["logistic"] = {{"beta", d.fit.beta},
                       {"converged", d.fit.converged},
                       {"residual_sse", d.fit.residual_sse}};
    j["per_database"].push_back(std::move(row));
  }
  j["per_distortion"] = nlohmann::json::array();
  for (const DistortionReport& d : report.per_distortion) {
    j["per_distortion"].push_back({{"database", d.database},
                                   {"distortion", d.row.label},
                                   {"n", d.row.n},
                                   {"srocc", OptionalJson(d.row.srocc)}});
  }
  j["averages"] = {{"direct", RowToJson(report.averages.direct)},
                   {"weighted", RowToJson(report.averages.weighted)}};
  j["records"] = nlohmann::json::array();
  for (const ReportRecord& r : report.records) {
    j["records"].push_back({{"database", r.database},
                            {"distortion", r.distortion},
                            {"ref", r.ref},
                            {"test", r.test},
                            {"subjective", r.subjective},
                            {"subjective_kind", SubjectiveKindName(r.subjective_kind)},
                            {"q", r.q},
                            {"mapped", r.mapped},
                            {"residual", r.residual}});
  }
  return j;
}

EvalReport ReportFromJson(const nlohmann::json& j) {
  try {
    EvalReport report;
    report.tool_version = j.at("tool_version").get<std::string>();
    report.metric = j.at("metric").get<std::string>();
    report.saliency_method = j.at("saliency_method").get<std::string>();
    report.timestamp = j.at("timestamp").get<std::string>();
    for (const auto& row : j.at("per_database")) {
      DatabaseReport d;
      d.database = row.at("database").get<std::string>();
      d.metrics = RowFromJson(row);
      d.srocc_signed = row.at("srocc_signed").get<double>();
      d.krocc_signed = row.at("krocc_signed").get<double>();
      d.plcc_signed = row.at("plcc_signed").get<double>();
      const auto& lg = row.at("logistic");
      d.fit.beta = lg.at("beta").get<std::array<double, 5>>();
      d.fit.converged = lg.at("converged").get<bool>();
      d.fit.residual_sse = lg.at("residual_sse").get<double>();
      report.per_database.push_back(std::move(d));
    }
    for (const auto& row : j.at("per_distortion")) {
      report.per_distortion.push_back(
          {row.at("database").get<std::string>(),
           {row.at("distortion").get<std::string>(), row.at("n").get<std::size_t>(),
            OptionalFromJson(row.at("srocc"))}});
    }
    report.averages.direct = RowFromJson(j.at("averages").at("direct"));
    report.averages.weighted = RowFromJson(j.at("averages").at("weighted"));
    for (const auto& row : j.at("records")) {
      ReportRecord r;
      r.database = row.at("database").get<std::string>();
      r.distortion = row.at("distortion").get<std::string>();
      r.ref = row.at("ref").get<std::string>();
      r.test = row.at("test").get<std::string>();
      r.subjective = row.at("subjective").get<double>();
      r.subjective_kind = ParseKind(Lower(row.at("subjective_kind").get<std::string>()));
      r.q = row.at("q").get<double>();
      r.mapped = row.at("mapped").get<double>();
      r.residual = row.at("residual").get<double>();
      report.records.push_back(std::move(r));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed report: ") + e.what());
  }
}

void WriteReport(const std::filesystem::path& path, const EvalReport& report) {
  std::ofstream out(path);
  out << ReportToJson(report).dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "cannot write report " + path.string());
}

EvalReport LoadReport(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open report " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                "report " + path.string() + " is not valid JSON: " + e.what());
  }
  return ReportFromJson(j);
}

void WriteRecordsCsv(const std::filesystem::path& path, const EvalReport& report) {
  std::ofstream out(path);
  out << "database,distortion,ref,test,subjective,subjective_kind,q,mapped,residual\n";
  out << std::setprecision(17);
  for (const ReportRecord& r : report.records) {
    out << r.database << ',' << r.distortion << ',' << r.ref << ',' << r.test << ','
        << r.subjective << ',' << SubjectiveKindName(r.subjective_kind) << ',' << r.q
        << ',' << r.mapped << ',' << r.residual << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

FTestComparison CompareReports(const EvalReport& a, const EvalReport& b,
                               double confidence) {
  using Key = std::tuple<std::string, std::string, std::string, double>;
  auto group = [](const EvalReport& r) {
    std::map<std::string, std::vector<std::pair<Key, double>>> by_db;
    for (const ReportRecord& rec : r.records) {
      by_db[rec.database].push_back(
          {Key{rec.ref, rec.test, rec.distortion, rec.subjective}, rec.residual});
    }
    for (auto& [db, items] : by_db) std::sort(items.begin(), items.end());
    return by_db;
  };
  const auto ga = group(a);
  const auto gb = group(b);
  if (ga.size() != gb.size()) {
    throw Error(ErrorCode::kIncompatibleReports, "reports cover different databases");
  }
  FTestComparison cmp;
  int improved = 0;
  for (auto ia = ga.begin(), ib = gb.begin(); ia != ga.end(); ++ia, ++ib) {
    if (ia->first != ib->first) {
      throw Error(ErrorCode::kIncompatibleReports,
                  "database '" + ia->first + "' missing from one report");
    }
    const auto& ra = ia->second;
    const auto& rb = ib->second;
    if (ra.size() != rb.size() ||
        !std::equal(ra.begin(), ra.end(), rb.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; })) {
      throw Error(ErrorCode::kIncompatibleReports,
                  "database '" + ia->first + "' was scored on different images");
    }
    std::vector<double> res_a;
    std::vector<double> res_b;
    for (std::size_t i = 0; i < ra.size(); ++i) {
      res_a.push_back(ra[i].second);
      res_b.push_back(rb[i].second);
    }
    FTestCell cell;
    cell.database = ia->first;
    cell.n = ra.size();
    cell.variance_a = SampleVariance(res_a);
    cell.variance_b = SampleVariance(res_b);
    const double dof = static_cast<double>(cell.n - 1);
    cell.critical = FDistributionQuantile(confidence, dof, dof);
    cell.verdict = FTest(res_a, res_b, confidence);
    if (cell.verdict == 1) ++improved;
    cmp.cells.push_back(std::move(cell));
  }
  cmp.improvement_percent =
      cmp.cells.empty() ? 0.0 : 100.0 * improved / static_cast<double>(cmp.cells.size());
  return cmp;
}

}  // namespace iqa

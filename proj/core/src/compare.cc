// Copyright 2026 The pjpeg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pjpeg/compare.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pjpeg/image_io.h"
#include "pjpeg/jpeg.h"
#include "pjpeg/metric.h"
#include "pjpeg/quant_tables.h"

namespace pjpeg {

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shortest representation that parses back to the same double.
std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void ProcessImage(const std::filesystem::path& path,
                  const CompareOptions& options, CorpusRow* row) {
  row->path = path.string();
  try {
    const RgbImage img = LoadImage(path);
    row->width = img.width();
    row->height = img.height();

    auto start = Clock::now();
    const EncodedJpeg baseline = EncodeImage(
        img, QualityTable(options.baseline_quality), options.baseline_sampling);
    const DecodedJpeg decoded = Decode(baseline.bytes);
    row->baseline.bytes = baseline.size();
    row->baseline.distance =
        GlobalDistance(ComputeDistanceMap(img, decoded.pixels));
    row->baseline.seconds = SecondsSince(start);

    OptimizerConfig cfg = options.optimizer;
    // A lossless baseline leaves no budget; ask for the smallest positive one.
    cfg.target_distance = std::max(row->baseline.distance, 1e-9);
    start = Clock::now();
    const PerceptualResult result = EncodePerceptual(img, cfg);
    row->perceptual.bytes = result.best.size();
    row->perceptual.distance = result.best.distance;
    row->perceptual.over_budget = result.over_budget;
    row->perceptual.seconds = SecondsSince(start);
  } catch (const std::exception& e) {
    row->error = e.what();
  }
}

}  // namespace

double SavingsFraction(uint64_t perceptual_total, uint64_t baseline_total) {
  if (baseline_total == 0) return 0.0;
  return static_cast<double>(perceptual_total) /
             static_cast<double>(baseline_total) -
         1.0;
}

void FinalizeTotals(ComparisonReport* report) {
  report->baseline_total = 0;
  report->perceptual_total = 0;
  for (const CorpusRow& row : report->rows) {
    if (!row.ok()) continue;
    report->baseline_total += row.baseline.bytes;
    report->perceptual_total += row.perceptual.bytes;
  }
  report->savings =
      SavingsFraction(report->perceptual_total, report->baseline_total);
}

std::vector<std::filesystem::path> ListCorpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext == ".png" || ext == ".ppm") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

ComparisonReport RunComparison(const std::vector<std::filesystem::path>& paths,
                               const CompareOptions& options) {
  ComparisonReport report;
  report.baseline_quality = options.baseline_quality;
  report.rows.resize(paths.size());

  const int jobs = std::clamp(options.jobs, 1, std::max<int>(1, paths.size()));
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (size_t i = next++; i < paths.size(); i = next++) {
      ProcessImage(paths[i], options, &report.rows[i]);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  FinalizeTotals(&report);
  return report;
}

std::string ReportToJson(const ComparisonReport& report) {
  nlohmann::ordered_json j;
  j["baseline_quality"] = report.baseline_quality;
  j["baseline_total_bytes"] = report.baseline_total;
  j["perceptual_total_bytes"] = report.perceptual_total;
  j["savings"] = report.savings;
  j["images"] = nlohmann::ordered_json::array();
  for (const CorpusRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["path"] = row.path;
    r["width"] = row.width;
    r["height"] = row.height;
    if (row.ok()) {
      r["baseline_bytes"] = row.baseline.bytes;
      r["baseline_distance"] = row.baseline.distance;
      r["baseline_seconds"] = row.baseline.seconds;
      r["perceptual_bytes"] = row.perceptual.bytes;
      r["perceptual_distance"] = row.perceptual.distance;
      r["perceptual_seconds"] = row.perceptual.seconds;
      r["over_budget"] = row.perceptual.over_budget;
      r["savings"] = SavingsFraction(row.perceptual.bytes, row.baseline.bytes);
    } else {
      r["error"] = row.error;
    }
    j["images"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string ReportToCsv(const ComparisonReport& report) {
  std::ostringstream out;
  out << "path,width,height,baseline_bytes,baseline_distance,baseline_seconds,"
         "perceptual_bytes,perceptual_distance,perceptual_seconds,over_budget,"
         "savings,error\n";
  const auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  for (const CorpusRow& row : report.rows) {
    out << quoted(row.path) << ',' << row.width << ',' << row.height << ',';
    if (row.ok()) {
      out << row.baseline.bytes << ',' << FormatDouble(row.baseline.distance)
          << ',' << FormatDouble(row.baseline.seconds) << ','
          << row.perceptual.bytes << ','
          << FormatDouble(row.perceptual.distance) << ','
          << FormatDouble(row.perceptual.seconds) << ','
          << (row.perceptual.over_budget ? 1 : 0) << ','
          << FormatDouble(
                 SavingsFraction(row.perceptual.bytes, row.baseline.bytes))
          << ",\n";
    } else {
      out << ",,,,,,,," << quoted(row.error) << '\n';
    }
  }
  out << "TOTAL,,," << report.baseline_total << ",,," << report.perceptual_total
      << ",,,," << FormatDouble(report.savings) << ",\n";
  return out.str();
}

}  // namespace pjpeg

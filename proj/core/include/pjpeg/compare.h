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

// Matched-distance corpus comparison.
//
// For every image: encode with a fixed quality-scaled table, measure the
// distance of that file, encode again with the perceptual optimizer targeting
// exactly that distance, and record both sizes. Totals and savings are
// reduced over the images that completed.

#ifndef PJPEG_COMPARE_H_
#define PJPEG_COMPARE_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pjpeg/color.h"
#include "pjpeg/optimizer.h"

namespace pjpeg {

struct EncoderResult {
  uint64_t bytes = 0;
  double distance = 0.0;
  double seconds = 0.0;
  bool over_budget = false;
};

struct CorpusRow {
  std::string path;
  int width = 0;
  int height = 0;
  EncoderResult baseline;
  EncoderResult perceptual;
  // Non-empty when the image could not be processed.
  std::string error;

  bool ok() const { return error.empty(); }
};

struct ComparisonReport {
  int baseline_quality = 0;
  std::vector<CorpusRow> rows;
  uint64_t baseline_total = 0;
  uint64_t perceptual_total = 0;
  double savings = 0.0;
};

// perceptual_total / baseline_total - 1.
double SavingsFraction(uint64_t perceptual_total, uint64_t baseline_total);

// Sums the rows that completed and recomputes savings.
void FinalizeTotals(ComparisonReport* report);

struct CompareOptions {
  int baseline_quality = 90;
  Sampling baseline_sampling = Sampling::kYuv444;
  // target_distance is overwritten per image.
  OptimizerConfig optimizer;
  int jobs = 1;
};

// .png and .ppm files directly inside dir, sorted by path.
std::vector<std::filesystem::path> ListCorpus(const std::filesystem::path& dir);

// Rows are ordered as paths regardless of jobs. Per-image failures are
// recorded in the row and do not stop the run.
ComparisonReport RunComparison(const std::vector<std::filesystem::path>& paths,
                               const CompareOptions& options);

std::string ReportToJson(const ComparisonReport& report);
std::string ReportToCsv(const ComparisonReport& report);

}  // namespace pjpeg

#endif  // PJPEG_COMPARE_H_

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

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pjpeg/compare.h"
#include "pjpeg/image_io.h"
#include "pjpeg/metric.h"
#include "pjpeg/optimizer.h"
#include "pjpeg/quality.h"

namespace pjpeg::cli {

namespace {

namespace fs = std::filesystem;

struct EncodeArgs {
  std::string input;
  std::string output;
  std::optional<double> distance;
  std::optional<int> quality;
  bool yuv420 = false;
  int max_iters = OptimizerConfig().max_local_iterations;
};

struct CompareArgs {
  std::string corpus;
  int baseline_quality = 90;
  int jobs = 1;
  std::string report = "both";
  std::string out_prefix = "comparison";
  bool yuv420 = false;
  int max_iters = OptimizerConfig().max_local_iterations;
};

struct DistanceArgs {
  std::string a;
  std::string b;
  std::string heatmap;
};

std::string FormatDistance(double d) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", d);
  return buf;
}

int RunEncode(const EncodeArgs& args, std::ostream& out, std::ostream& err) {
  if (args.distance.has_value() == args.quality.has_value()) {
    err << "encode: exactly one of --distance or --quality is required\n";
    return kExitUsage;
  }
  RgbImage img;
  try {
    img = LoadImage(args.input);
  } catch (const ImageIoError& e) {
    err << "encode: " << e.what() << "\n";
    return kExitUsage;
  }
  OptimizerConfig cfg;
  cfg.target_distance =
      args.distance ? *args.distance : QualityToDistance(*args.quality);
  cfg.allow_yuv420 = args.yuv420;
  cfg.max_local_iterations = args.max_iters;
  try {
    cfg.Validate();
  } catch (const std::invalid_argument& e) {
    err << "encode: " << e.what() << "\n";
    return kExitUsage;
  }

  const PerceptualResult result = EncodePerceptual(img, cfg);
  const fs::path output = args.output.empty()
                              ? fs::path(args.input).replace_extension(".jpg")
                              : fs::path(args.output);
  try {
    WriteFileBytes(output, result.best.jpeg.bytes);
  } catch (const ImageIoError& e) {
    err << "encode: " << e.what() << "\n";
    return kExitIo;
  }
  out << "size=" << result.best.size()
      << " distance=" << FormatDistance(result.best.distance)
      << " target=" << FormatDistance(cfg.target_distance)
      << " rounds=" << result.local_rounds << " table=" << result.table_index
      << " sampling=" << SamplingName(result.sampling)
      << " over_budget=" << (result.over_budget ? 1 : 0) << "\n";
  return result.over_budget ? kExitOverBudget : kExitOk;
}

int RunCompare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> paths;
  std::error_code ec;
  if (!fs::is_directory(args.corpus, ec)) {
    err << "compare: " << args.corpus << " is not a directory\n";
    return kExitUsage;
  }
  paths = ListCorpus(args.corpus);
  if (paths.empty()) {
    err << "compare: no .png or .ppm images in " << args.corpus << "\n";
    return kExitUsage;
  }
  CompareOptions options;
  options.baseline_quality = args.baseline_quality;
  options.jobs = args.jobs;
  options.optimizer.allow_yuv420 = args.yuv420;
  options.optimizer.max_local_iterations = args.max_iters;

  const ComparisonReport report = RunComparison(paths, options);
  try {
    if (args.report == "json" || args.report == "both") {
      const std::string json = ReportToJson(report);
      WriteFileBytes(args.out_prefix + ".json",
                     {reinterpret_cast<const uint8_t*>(json.data()), json.size()});
    }
    if (args.report == "csv" || args.report == "both") {
      const std::string csv = ReportToCsv(report);
      WriteFileBytes(args.out_prefix + ".csv",
                     {reinterpret_cast<const uint8_t*>(csv.data()), csv.size()});
    }
  } catch (const ImageIoError& e) {
    err << "compare: " << e.what() << "\n";
    return kExitIo;
  }
  size_t failed = 0;
  for (const CorpusRow& row : report.rows) {
    if (!row.ok()) {
      ++failed;
      err << "compare: " << row.path << ": " << row.error << "\n";
    }
  }
  char savings[32];
  std::snprintf(savings, sizeof(savings), "%.2f%%", 100.0 * report.savings);
  out << "images=" << report.rows.size() - failed << " failed=" << failed
      << " baseline_bytes=" << report.baseline_total
      << " perceptual_bytes=" << report.perceptual_total
      << " savings=" << savings << "\n";
  return failed == report.rows.size() ? kExitData : kExitOk;
}

int RunDistance(const DistanceArgs& args, std::ostream& out,
                std::ostream& err) {
  RgbImage a, b;
  try {
    a = LoadImage(args.a);
    b = LoadImage(args.b);
  } catch (const ImageIoError& e) {
    err << "distance: " << e.what() << "\n";
    return kExitUsage;
  }
  if (a.width() != b.width() || a.height() != b.height()) {
    err << "distance: dimensions differ (" << a.width() << "x" << a.height()
        << " vs " << b.width() << "x" << b.height() << ")\n";
    return kExitData;
  }
  const DistanceMap map = ComputeDistanceMap(a, b);
  out << FormatDistance(GlobalDistance(map)) << "\n";
  if (!args.heatmap.empty()) {
    try {
      WriteDistanceMapPgm(map, args.heatmap);
    } catch (const std::exception& e) {
      err << "distance: " << e.what() << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Perceptually guided baseline JPEG encoder"};
  app.require_subcommand(1);

  EncodeArgs enc;
  CLI::App* encode = app.add_subcommand(
      "encode", "Encode an image to the smallest JPEG within a distance budget");
  encode->add_option("input", enc.input, "PNG or PPM input")->required();
  encode->add_option("-o,--output", enc.output,
                     "Output JPEG (default: input with .jpg extension)");
  encode->add_option("--distance", enc.distance, "Target perceptual distance")
      ->check(CLI::PositiveNumber);
  encode->add_option("--quality", enc.quality,
                     "Quality 1..100, mapped to a target distance")
      ->check(CLI::Range(1, 100));
  encode->add_flag("--yuv420", enc.yuv420, "Allow 4:2:0 chroma subsampling");
  encode->add_option("--max-iters", enc.max_iters, "Zeroing rounds")
      ->check(CLI::NonNegativeNumber);

  CompareArgs cmp;
  CLI::App* compare = app.add_subcommand(
      "compare", "Matched-distance comparison against fixed-quality encodes");
  compare->add_option("corpus", cmp.corpus, "Directory of PNG/PPM images")
      ->required();
  compare->add_option("--baseline-quality", cmp.baseline_quality,
                      "Quality of the fixed-table baseline")
      ->check(CLI::Range(1, 100));
  compare->add_option("--jobs", cmp.jobs, "Images processed in parallel")
      ->check(CLI::PositiveNumber);
  compare->add_option("--report", cmp.report, "Report format")
      ->check(CLI::IsMember({"json", "csv", "both"}));
  compare->add_option("--out", cmp.out_prefix,
                      "Report path prefix (.json/.csv appended)");
  compare->add_flag("--yuv420", cmp.yuv420, "Allow 4:2:0 in the optimizer");
  compare->add_option("--max-iters", cmp.max_iters, "Zeroing rounds")
      ->check(CLI::NonNegativeNumber);

  DistanceArgs dist;
  CLI::App* distance =
      app.add_subcommand("distance", "Perceptual distance between two images");
  distance->add_option("reference", dist.a, "Reference image")->required();
  distance->add_option("candidate", dist.b, "Candidate image")->required();
  distance->add_option("--heatmap", dist.heatmap,
                       "Write the per-block distance map as PGM");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode) return RunEncode(enc, out, err);
    if (*compare) return RunCompare(cmp, out, err);
    return RunDistance(dist, out, err);
  } catch (const std::exception& e) {
    err << "pjpeg: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace pjpeg::cli

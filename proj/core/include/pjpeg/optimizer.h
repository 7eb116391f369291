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

// Closed-loop search for the smallest JPEG under a perceptual budget.
//
// The search first picks one global quantization table from a predefined,
// totally ordered set, then repeatedly zeroes the least important AC
// coefficients of every block at once, steering the per-block zero counts by
// the per-block distance map of the previous candidate. Every encode along the
// way is kept as a candidate and the smallest one within budget wins.

#ifndef PJPEG_OPTIMIZER_H_
#define PJPEG_OPTIMIZER_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pjpeg/coeff_image.h"
#include "pjpeg/jpeg.h"
#include "pjpeg/metric.h"
#include "pjpeg/quant_tables.h"

namespace pjpeg {

struct OptimizerConfig {
  double target_distance = 1.0;
  // Global phase aims for alpha * target, leaving slack for zeroing.
  double alpha = 0.97;
  // Upper bound on tables encoded during the global phase.
  int max_global_candidates = 16;
  // 0 skips the zeroing loop entirely.
  int max_local_iterations = 30;
  bool allow_yuv420 = false;
  // Evaluate every table instead of binary searching; for images on which
  // distance is not monotone in table coarseness.
  bool linear_global_search = false;
  int table_set_size = 16;
  // Skips the global phase and runs the zeroing loop on this table.
  std::optional<int> fixed_table_index;

  // Throws std::invalid_argument.
  void Validate() const;
};

// Per block, the 63 AC natural indices least important first, with the
// matching scores.
struct BlockOrder {
  std::array<uint8_t, kDctBlockSize - 1> indices;
  std::array<float, kDctBlockSize - 1> scores;
};

struct ImportanceOrder {
  std::array<std::vector<BlockOrder>, 3> components;
};

// Number of leading entries of each block's order to force to zero.
struct ZeroPlan {
  struct Grid {
    int width_in_blocks = 0;
    int height_in_blocks = 0;
    std::vector<uint8_t> counts;

    bool operator==(const Grid& other) const = default;
  };
  std::array<Grid, 3> components;

  static ZeroPlan Empty(const CoeffImage& coeffs);
  bool operator==(const ZeroPlan& other) const = default;
};

struct Provenance {
  int table_index = 0;
  Sampling sampling = Sampling::kYuv444;
  // Unset for global-phase candidates.
  std::optional<ZeroPlan> plan;
  // Zeroing round that produced the candidate, -1 for the global phase.
  int round = -1;
};

struct CandidateJpeg {
  EncodedJpeg jpeg;
  double distance = 0.0;
  Provenance provenance;

  size_t size() const { return jpeg.size(); }
};

// Importance score of AC coefficient k: |dequantized value| times the
// sensitivity-over-mask weight of the metric. Ties go to the higher zigzag
// position first; coefficients that are already zero score 0.
ImportanceOrder RankCoefficients(const CoeffImage& coeffs,
                                 const PerceptualMetric& metric);

// Zeroes the first plan-count entries of every block order. DC is never
// touched. Throws std::invalid_argument when the plan shape differs.
CoeffImage ApplyZeroPlan(const CoeffImage& coeffs, const ImportanceOrder& order,
                         const ZeroPlan& plan);

// Encodes, decodes with the self-decoder and measures against the metric.
CandidateJpeg EvaluateCandidate(const CoeffImage& coeffs,
                                const PerceptualMetric& metric,
                                Provenance provenance);

struct GlobalSelection {
  int table_index = 0;
  bool budget_infeasible = false;
  std::vector<CandidateJpeg> candidates;
};

// Coarsest table whose plain encode measures <= alpha * target.
GlobalSelection SelectGlobalTable(const PerceptualMetric& metric,
                                  const QuantTableSet& set,
                                  const OptimizerConfig& cfg,
                                  Sampling sampling);

struct LocalResult {
  std::vector<CandidateJpeg> candidates;
  int rounds = 0;
  bool reached_fixpoint = false;
  ZeroPlan final_plan;
};

// Zero-count feedback loop on a fixed table. coeffs is the pristine
// quantized image; plans are always applied to it.
LocalResult LocalOptimize(const PerceptualMetric& metric,
                          const CoeffImage& coeffs, int table_index,
                          const OptimizerConfig& cfg);

// kYuv420 only when allowed and the finest table in 4:2:0 already measures
// <= alpha * target.
Sampling DecideSampling(const PerceptualMetric& metric,
                        const QuantTableSet& set, const OptimizerConfig& cfg);

struct Selection {
  CandidateJpeg candidate;
  bool over_budget = false;
};

// Smallest candidate within target; if none qualifies the closest one,
// flagged. Throws std::invalid_argument on an empty list.
Selection SelectBest(const std::vector<CandidateJpeg>& candidates,
                     double target_distance);

struct PerceptualResult {
  CandidateJpeg best;
  bool over_budget = false;
  bool budget_infeasible = false;
  Sampling sampling = Sampling::kYuv444;
  int table_index = 0;
  int local_rounds = 0;
  size_t candidates_evaluated = 0;
  // Smallest plain-table candidate within budget, if any.
  std::optional<size_t> global_phase_best_size;
};

// DecideSampling, SelectGlobalTable, LocalOptimize, SelectBest. The winner's
// distance is re-measured from its bytes before returning.
PerceptualResult EncodePerceptual(const RgbImage& img,
                                  const OptimizerConfig& cfg);

}  // namespace pjpeg

#endif  // PJPEG_OPTIMIZER_H_

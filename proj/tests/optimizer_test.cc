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


#include "pjpeg/optimizer.h"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "pjpeg/conformance.h"
#include "test_util.h"

namespace pjpeg {
namespace {

CandidateJpeg Fake(size_t size, double distance) {
  CandidateJpeg c;
  c.jpeg.bytes.assign(size, 0);
  c.distance = distance;
  return c;
}

const RgbImage& Photo() {
  static const RgbImage img = testing::CorpusCrop("astronaut.png", 160, 40, 64, 64);
  return img;
}

TEST(OptimizerConfigTest, Validation) {
  OptimizerConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.target_distance = 0.0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg = {};
  cfg.alpha = 1.0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg = {};
  cfg.max_global_candidates = 0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg = {};
  cfg.max_local_iterations = -1;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg = {};
  cfg.fixed_table_index = 16;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg.target_distance = 0.0;
  EXPECT_THROW(EncodePerceptual(Photo(), cfg), std::invalid_argument);
}

TEST(SelectBestTest, Rules) {
  Selection s = SelectBest({Fake(100, 0.9), Fake(80, 1.1)}, 1.0);
  EXPECT_EQ(s.candidate.size(), 100u);
  EXPECT_FALSE(s.over_budget);

  s = SelectBest({Fake(100, 0.9), Fake(80, 0.95)}, 1.0);
  EXPECT_EQ(s.candidate.size(), 80u);

  s = SelectBest({Fake(100, 1.3), Fake(80, 1.1), Fake(90, 1.2)}, 1.0);
  EXPECT_EQ(s.candidate.size(), 80u);
  EXPECT_TRUE(s.over_budget);

  EXPECT_THROW(SelectBest({}, 1.0), std::invalid_argument);
}

CoeffImage OneBlock(const std::vector<std::pair<int, int32_t>>& values) {
  CoeffImage c = MakeCoeffImage(8, 8, Sampling::kYuv444, ScaledAnnexKTable(1.0));
  for (auto [k, v] : values) c.components[0].blocks[0][k] = v;
  return c;
}

TEST(RankTest, OrdersArePermutationsWithoutDc) {
  const CoeffImage coeffs =
      ForwardTransform(Photo(), ScaledAnnexKTable(0.5), Sampling::kYuv420);
  const PerceptualMetric metric(Photo());
  const ImportanceOrder order = RankCoefficients(coeffs, metric);
  for (int c = 0; c < 3; ++c) {
    ASSERT_EQ(order.components[c].size(), coeffs.components[c].blocks.size());
    for (const BlockOrder& b : order.components[c]) {
      std::set<int> seen(b.indices.begin(), b.indices.end());
      EXPECT_EQ(seen.size(), 63u);
      EXPECT_EQ(seen.count(0), 0u);
      EXPECT_TRUE(std::is_sorted(b.scores.begin(), b.scores.end()));
    }
  }
}

TEST(RankTest, SingleNonzeroRanksLast) {
  const RgbImage ref = testing::FlatImage(8, 8, 90, 120, 150);
  const CoeffImage coeffs = OneBlock({{0, 5}, {19, 3}});
  const ImportanceOrder order = RankCoefficients(coeffs, PerceptualMetric(ref));
  const BlockOrder& b = order.components[0][0];
  EXPECT_EQ(b.indices[62], 19);
  EXPECT_GT(b.scores[62], 0.0f);
  for (int i = 0; i < 62; ++i) EXPECT_EQ(b.scores[i], 0.0f);
  // Zero-score ties: higher zigzag positions come first.
  for (int i = 1; i < 62; ++i) {
    EXPECT_GT(kNaturalToZigzag[b.indices[i - 1]], kNaturalToZigzag[b.indices[i]]);
  }
}

TEST(RankTest, ZeroingAnAllZeroBlockIsNoOp) {
  const RgbImage ref = testing::FlatImage(8, 8, 90, 120, 150);
  const CoeffImage coeffs = OneBlock({{0, 7}});
  const ImportanceOrder order = RankCoefficients(coeffs, PerceptualMetric(ref));
  ZeroPlan plan = ZeroPlan::Empty(coeffs);
  for (auto& g : plan.components) std::fill(g.counts.begin(), g.counts.end(), 63);
  EXPECT_TRUE(ApplyZeroPlan(coeffs, order, plan) == coeffs);
}

TEST(RankTest, LeastImportantHurtsLessThanMostImportant) {
  std::mt19937 rng(77);
  for (int i = 0; i < 10; ++i) {
    const RgbImage ref = testing::UniformNoiseImage(8, 8, rng);
    const CoeffImage coeffs =
        ForwardTransform(ref, ScaledAnnexKTable(0.1), Sampling::kYuv444);
    const PerceptualMetric metric(ref);
    const BlockOrder& order = RankCoefficients(coeffs, metric).components[0][0];
    const auto zero_one = [&](int index) {
      CoeffImage work = coeffs;
      work.components[0].blocks[0][index] = 0;
      return metric.Distance(Reconstruct(work));
    };
    EXPECT_LT(zero_one(order.indices.front()), zero_one(order.indices.back()))
        << "image " << i;
  }
}

TEST(ZeroPlanTest, IdentityFullAndPrefix) {
  const CoeffImage coeffs =
      ForwardTransform(Photo(), ScaledAnnexKTable(0.2), Sampling::kYuv444);
  const PerceptualMetric metric(Photo());
  const ImportanceOrder order = RankCoefficients(coeffs, metric);

  ZeroPlan plan = ZeroPlan::Empty(coeffs);
  EXPECT_TRUE(ApplyZeroPlan(coeffs, order, plan) == coeffs);

  for (auto& g : plan.components) std::fill(g.counts.begin(), g.counts.end(), 63);
  const CoeffImage all = ApplyZeroPlan(coeffs, order, plan);
  for (int c = 0; c < 3; ++c) {
    for (size_t b = 0; b < all.components[c].blocks.size(); ++b) {
      EXPECT_EQ(all.components[c].blocks[b][0], coeffs.components[c].blocks[b][0]);
      for (int k = 1; k < kDctBlockSize; ++k) {
        ASSERT_EQ(all.components[c].blocks[b][k], 0);
      }
    }
  }

  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    ZeroPlan p = ZeroPlan::Empty(coeffs), q = ZeroPlan::Empty(coeffs);
    for (int c = 0; c < 3; ++c) {
      for (size_t i = 0; i < p.components[c].counts.size(); ++i) {
        const int a = rng() % 64;
        p.components[c].counts[i] = a;
        q.components[c].counts[i] = a + rng() % (64 - a);
      }
    }
    const CoeffImage ap = ApplyZeroPlan(coeffs, order, p);
    const CoeffImage aq = ApplyZeroPlan(coeffs, order, q);
    EXPECT_TRUE(ApplyZeroPlan(coeffs, order, p) == ap);
    for (int c = 0; c < 3; ++c) {
      for (size_t b = 0; b < ap.components[c].blocks.size(); ++b) {
        for (int k = 0; k < kDctBlockSize; ++k) {
          if (ap.components[c].blocks[b][k] == 0) {
            ASSERT_EQ(aq.components[c].blocks[b][k], 0);
          }
        }
      }
    }
  }

  ZeroPlan bad = ZeroPlan::Empty(coeffs);
  bad.components[1].counts.pop_back();
  EXPECT_THROW(ApplyZeroPlan(coeffs, order, bad), std::invalid_argument);
}

TEST(TableSelectionTest, GenerousTargetPicksCoarsest) {
  const PerceptualMetric metric(Photo());
  const QuantTableSet set = BuildTableSet(16);
  OptimizerConfig cfg;
  cfg.target_distance = 1e6;
  const GlobalSelection g = SelectGlobalTable(metric, set, cfg, Sampling::kYuv444);
  EXPECT_EQ(g.table_index, 15);
  EXPECT_FALSE(g.budget_infeasible);
  EXPECT_FALSE(g.candidates.empty());
}

TEST(TableSelectionTest, TinyTargetIsInfeasible) {
  const PerceptualMetric metric(Photo());
  OptimizerConfig cfg;
  cfg.target_distance = 1e-6;
  const GlobalSelection g =
      SelectGlobalTable(metric, BuildTableSet(16), cfg, Sampling::kYuv444);
  EXPECT_EQ(g.table_index, 0);
  EXPECT_TRUE(g.budget_infeasible);
  ASSERT_EQ(g.candidates.size(), 1u);
}

TEST(TableSelectionTest, SelectedTableHonorsSlack) {
  const QuantTableSet set = BuildTableSet(16);
  std::mt19937 rng(5);
  const RgbImage flat = testing::FlatImage(64, 64, 128, 128, 128);
  const RgbImage noise = testing::UniformNoiseImage(64, 64, rng);
  for (bool linear : {false, true}) {
    OptimizerConfig cfg;
    cfg.target_distance = 1.0;
    cfg.linear_global_search = linear;
    for (const RgbImage* img : {&flat, &noise, &Photo()}) {
      const PerceptualMetric metric(*img);
      const GlobalSelection g = SelectGlobalTable(metric, set, cfg, Sampling::kYuv444);
      bool found = false;
      for (const CandidateJpeg& c : g.candidates) {
        if (c.provenance.table_index != g.table_index) continue;
        found = true;
        EXPECT_LE(c.distance, cfg.alpha * cfg.target_distance);
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(LocalOptimizeTest, ZeroIterationsGivesPlainEncode) {
  const PerceptualMetric metric(Photo());
  const CoeffImage coeffs =
      ForwardTransform(Photo(), BuildTableSet(16)[6], Sampling::kYuv444);
  OptimizerConfig cfg;
  cfg.max_local_iterations = 0;
  const LocalResult r = LocalOptimize(metric, coeffs, 6, cfg);
  ASSERT_EQ(r.candidates.size(), 1u);
  EXPECT_EQ(r.rounds, 0);
  EXPECT_EQ(r.candidates[0].jpeg, EntropyEncode(coeffs));
}

TEST(LocalOptimizeTest, ReachesFixpointAndEveryCandidateConforms) {
  const PerceptualMetric metric(Photo());
  const QuantTableSet set = BuildTableSet(16);
  OptimizerConfig cfg;
  cfg.target_distance = 1.0;
  cfg.max_local_iterations = 200;
  const CoeffImage coeffs = ForwardTransform(Photo(), set[6], Sampling::kYuv444);
  const LocalResult r = LocalOptimize(metric, coeffs, 6, cfg);
  EXPECT_TRUE(r.reached_fixpoint);
  EXPECT_LT(r.rounds, cfg.max_local_iterations);
  EXPECT_EQ(static_cast<int>(r.candidates.size()), r.rounds);
  for (const CandidateJpeg& c : r.candidates) {
    EXPECT_TRUE(CheckConformance(c.jpeg.bytes).ok);
    const DecodedJpeg d = Decode(c.jpeg.bytes);
    EXPECT_DOUBLE_EQ(c.distance, metric.Distance(d.pixels));
    ASSERT_TRUE(c.provenance.plan.has_value());
    // DC is never zeroed.
    for (int comp = 0; comp < 3; ++comp) {
      for (size_t b = 0; b < coeffs.components[comp].blocks.size(); ++b) {
        EXPECT_EQ(d.coeffs.components[comp].blocks[b][0],
                  coeffs.components[comp].blocks[b][0]);
      }
    }
  }
}

TEST(SamplingTest, DisallowedGives444) {
  OptimizerConfig cfg;
  cfg.target_distance = 100.0;
  EXPECT_EQ(DecideSampling(PerceptualMetric(Photo()), BuildTableSet(16), cfg),
            Sampling::kYuv444);
}

TEST(SamplingTest, StrictTargetOnColorfulImageGives444) {
  OptimizerConfig cfg;
  cfg.allow_yuv420 = true;
  cfg.target_distance = 0.5;
  const RgbImage img = testing::CorpusCrop("coffee.png", 200, 200, 64, 64);
  EXPECT_EQ(DecideSampling(PerceptualMetric(img), BuildTableSet(16), cfg),
            Sampling::kYuv444);
}

TEST(SamplingTest, GrayscaleAllows420) {
  RgbImage gray = Photo();
  for (int y = 0; y < gray.height(); ++y) {
    for (int x = 0; x < gray.width(); ++x) {
      const uint8_t v = gray.at(x, y, 1);
      gray.SetPixel(x, y, v, v, v);
    }
  }
  const QuantTableSet set = BuildTableSet(16);
  const PerceptualMetric metric(gray);
  const double d444 = metric.Distance(
      Decode(EncodeImage(gray, set[0], Sampling::kYuv444).bytes).pixels);
  const double d420 = metric.Distance(
      Decode(EncodeImage(gray, set[0], Sampling::kYuv420).bytes).pixels);
  EXPECT_DOUBLE_EQ(d420, d444);

  OptimizerConfig cfg;
  cfg.allow_yuv420 = true;
  cfg.target_distance = d444 / cfg.alpha + 1e-9;
  EXPECT_EQ(DecideSampling(metric, set, cfg), Sampling::kYuv420);
}

TEST(EncodePerceptualTest, MeetsTargetAndIsDeterministic) {
  OptimizerConfig cfg;
  cfg.target_distance = 1.2;
  const PerceptualResult a = EncodePerceptual(Photo(), cfg);
  const PerceptualResult b = EncodePerceptual(Photo(), cfg);
  EXPECT_FALSE(a.over_budget);
  EXPECT_LE(a.best.distance, cfg.target_distance);
  EXPECT_EQ(a.best.jpeg, b.best.jpeg);
  EXPECT_TRUE(CheckConformance(a.best.jpeg.bytes).ok);
  EXPECT_DOUBLE_EQ(a.best.distance,
                   GlobalDistance(ComputeDistanceMap(
                       Photo(), Decode(a.best.jpeg.bytes).pixels)));
  ASSERT_TRUE(a.global_phase_best_size.has_value());
  EXPECT_LE(a.best.size(), *a.global_phase_best_size);
}

TEST(EncodePerceptualTest, ZeroIterationsReturnsGlobalPhaseOutput) {
  OptimizerConfig cfg;
  cfg.target_distance = 1.2;
  cfg.max_local_iterations = 0;
  const PerceptualResult r = EncodePerceptual(Photo(), cfg);
  EXPECT_EQ(r.local_rounds, 0);
  EXPECT_FALSE(r.best.provenance.plan.has_value());
  EXPECT_EQ(r.best.size(), *r.global_phase_best_size);
}

TEST(EncodePerceptualTest, InfeasibleBudgetIsFlaggedNotFatal) {
  OptimizerConfig cfg;
  cfg.target_distance = 1e-4;
  cfg.max_local_iterations = 3;
  const PerceptualResult r = EncodePerceptual(Photo(), cfg);
  EXPECT_TRUE(r.over_budget);
  EXPECT_TRUE(r.budget_infeasible);
  EXPECT_FALSE(r.best.jpeg.bytes.empty());
}

}  // namespace
}  // namespace pjpeg

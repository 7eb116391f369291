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
#include <map>
#include <stdexcept>

namespace pjpeg {

namespace {

struct Measured {
  CandidateJpeg candidate;
  DistanceMap map;
};

Measured Measure(const CoeffImage& coeffs, const PerceptualMetric& metric,
                 Provenance provenance) {
  Measured m;
  m.candidate.jpeg = EntropyEncode(coeffs);
  const DecodedJpeg decoded = Decode(m.candidate.jpeg.bytes);
  m.map = metric.Compare(decoded.pixels);
  m.candidate.distance = GlobalDistance(m.map);
  m.candidate.provenance = std::move(provenance);
  return m;
}

// A set of component blocks whose zero counts move together, and the metric
// blocks that judge them. In 4:4:4 a unit is the three blocks at one grid
// position; in 4:2:0 luma blocks and chroma block pairs form separate units.
struct ZeroingUnit {
  std::vector<std::pair<int, size_t>> members;  // (component, block index)
  std::vector<size_t> metric_blocks;
  // Component of each merged-order position, least important first.
  std::vector<uint8_t> merged;
  int floor = 0;  // leading no-op positions (coefficient already zero)
  int level = 0;
  int good = -1;  // highest level measured within budget
  int bad = -1;   // lowest level measured over budget, -1 when unknown
  int step = 1;
};

std::vector<ZeroingUnit> BuildUnits(const CoeffImage& coeffs,
                                    const ImportanceOrder& order,
                                    const PerceptualMetric& metric) {
  const int mw = metric.width_in_blocks();
  const int mh = metric.height_in_blocks();
  std::vector<ZeroingUnit> units;
  const auto& luma = coeffs.components[0];
  if (coeffs.sampling == Sampling::kYuv444) {
    for (size_t b = 0; b < luma.blocks.size(); ++b) {
      ZeroingUnit u;
      for (int c = 0; c < 3; ++c) u.members.push_back({c, b});
      u.metric_blocks.push_back(b);
      units.push_back(std::move(u));
    }
  } else {
    for (size_t b = 0; b < luma.blocks.size(); ++b) {
      ZeroingUnit u;
      u.members.push_back({0, b});
      u.metric_blocks.push_back(b);
      units.push_back(std::move(u));
    }
    const auto& chroma = coeffs.components[1];
    for (int cy = 0; cy < chroma.height_in_blocks; ++cy) {
      for (int cx = 0; cx < chroma.width_in_blocks; ++cx) {
        ZeroingUnit u;
        const size_t b = static_cast<size_t>(cy) * chroma.width_in_blocks + cx;
        u.members.push_back({1, b});
        u.members.push_back({2, b});
        for (int my = 2 * cy; my < std::min(2 * cy + 2, mh); ++my) {
          for (int mx = 2 * cx; mx < std::min(2 * cx + 2, mw); ++mx) {
            u.metric_blocks.push_back(static_cast<size_t>(my) * mw + mx);
          }
        }
        units.push_back(std::move(u));
      }
    }
  }

  for (ZeroingUnit& u : units) {
    // Merge the member orders by score; each member's positions remain a
    // prefix of its own order.
    std::vector<size_t> pos(u.members.size(), 0);
    const size_t total = u.members.size() * (kDctBlockSize - 1);
    u.merged.reserve(total);
    for (size_t n = 0; n < total; ++n) {
      int pick = -1;
      float best = 0.0f;
      for (size_t m = 0; m < u.members.size(); ++m) {
        if (pos[m] == kDctBlockSize - 1) continue;
        const auto [c, b] = u.members[m];
        const float s = order.components[c][b].scores[pos[m]];
        if (pick < 0 || s < best) {
          pick = static_cast<int>(m);
          best = s;
        }
      }
      if (best == 0.0f) ++u.floor;
      u.merged.push_back(static_cast<uint8_t>(pick));
      ++pos[pick];
    }
    u.level = u.floor;
  }
  return units;
}

ZeroPlan PlanFromLevels(const CoeffImage& coeffs,
                        const std::vector<ZeroingUnit>& units, bool safe) {
  ZeroPlan plan = ZeroPlan::Empty(coeffs);
  for (const ZeroingUnit& u : units) {
    const int level = safe ? std::max(u.good, u.floor) : u.level;
    std::array<int, 3> counts{};
    for (int i = 0; i < level; ++i) ++counts[u.merged[i]];
    for (size_t m = 0; m < u.members.size(); ++m) {
      const auto [c, b] = u.members[m];
      plan.components[c].counts[b] = static_cast<uint8_t>(counts[m]);
    }
  }
  return plan;
}

// Moves one unit's level given the error its last probe produced.
void UpdateUnit(ZeroingUnit& u, double error, double target) {
  const int top = static_cast<int>(u.merged.size());
  if (error < target) {
    u.good = std::max(u.good, u.level);
    if (u.bad >= 0) {
      u.level = (u.good + u.bad) / 2;
    } else if (u.level < top) {
      if (error < 0.5 * target) {
        u.level = std::min(top, u.level + u.step);
        u.step *= 2;
      } else {
        u.step = 1;
        u.level = std::min(top, u.level + 1);
      }
    }
  } else {
    u.bad = u.bad < 0 ? u.level : std::min(u.bad, u.level);
    u.step = 1;
    if (u.good >= 0) {
      u.level = (u.good + u.bad) / 2;
    } else {
      u.level = std::max(u.floor, u.level - 1);
    }
  }
}

}  // namespace

void OptimizerConfig::Validate() const {
  if (!(target_distance > 0.0)) {
    throw std::invalid_argument("target distance must be positive");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (max_global_candidates < 1) {
    throw std::invalid_argument("max_global_candidates must be >= 1");
  }
  if (max_local_iterations < 0) {
    throw std::invalid_argument("max_local_iterations must be >= 0");
  }
  if (table_set_size < 2) {
    throw std::invalid_argument("table_set_size must be >= 2");
  }
  if (fixed_table_index &&
      (*fixed_table_index < 0 || *fixed_table_index >= table_set_size)) {
    throw std::invalid_argument("fixed_table_index outside the table set");
  }
}

CandidateJpeg EvaluateCandidate(const CoeffImage& coeffs,
                                const PerceptualMetric& metric,
                                Provenance provenance) {
  return Measure(coeffs, metric, std::move(provenance)).candidate;
}

GlobalSelection SelectGlobalTable(const PerceptualMetric& metric,
                                  const QuantTableSet& set,
                                  const OptimizerConfig& cfg,
                                  Sampling sampling) {
  cfg.Validate();
  const double budget = cfg.alpha * cfg.target_distance;
  const YuvPlanes planes = RgbToYuv(metric.reference(), sampling);
  GlobalSelection out;
  std::map<int, double> measured;
  const auto distance_of = [&](int i) {
    auto it = measured.find(i);
    if (it != measured.end()) return it->second;
    Provenance prov;
    prov.table_index = i;
    prov.sampling = sampling;
    CandidateJpeg cand =
        EvaluateCandidate(QuantizePlanes(planes, set[i]), metric, prov);
    const double d = cand.distance;
    out.candidates.push_back(std::move(cand));
    measured[i] = d;
    return d;
  };
  const auto budget_left = [&] {
    return static_cast<int>(measured.size()) < cfg.max_global_candidates;
  };
  const int n = static_cast<int>(set.size());

  if (distance_of(0) > budget) {
    out.table_index = 0;
    out.budget_infeasible = true;
    return out;
  }
  int good = 0;
  if (cfg.linear_global_search) {
    for (int i = 1; i < n && budget_left(); ++i) {
      if (distance_of(i) <= budget) good = i;
    }
  } else {
    // Coarsest qualifying table, assuming distance grows with coarseness.
    int bad = n;
    while (bad - good > 1 && budget_left()) {
      const int mid = good + (bad - good) / 2;
      if (distance_of(mid) <= budget) {
        good = mid;
      } else {
        bad = mid;
      }
    }
  }
  out.table_index = good;
  return out;
}

LocalResult LocalOptimize(const PerceptualMetric& metric,
                          const CoeffImage& coeffs, int table_index,
                          const OptimizerConfig& cfg) {
  cfg.Validate();
  LocalResult result;
  result.final_plan = ZeroPlan::Empty(coeffs);
  Provenance base;
  base.table_index = table_index;
  base.sampling = coeffs.sampling;
  if (cfg.max_local_iterations == 0) {
    result.candidates.push_back(EvaluateCandidate(coeffs, metric, base));
    return result;
  }

  const ImportanceOrder order = RankCoefficients(coeffs, metric);
  std::vector<ZeroingUnit> units = BuildUnits(coeffs, order, metric);
  const double target = cfg.target_distance;

  std::optional<ZeroPlan> previous;
  for (int round = 0; round < cfg.max_local_iterations; ++round) {
    // The last round commits every unit to its best known level.
    const bool last = round == cfg.max_local_iterations - 1;
    ZeroPlan plan = PlanFromLevels(coeffs, units, last && round > 0);
    if (previous && plan == *previous) {
      result.reached_fixpoint = true;
      break;
    }
    Provenance prov = base;
    prov.plan = plan;
    prov.round = round;
    Measured m = Measure(ApplyZeroPlan(coeffs, order, plan), metric, prov);
    result.candidates.push_back(std::move(m.candidate));
    result.rounds = round + 1;
    result.final_plan = plan;
    previous = std::move(plan);
    for (ZeroingUnit& u : units) {
      double error = 0.0;
      for (size_t b : u.metric_blocks) error = std::max(error, m.map.values[b]);
      UpdateUnit(u, error, target);
    }
  }
  return result;
}

Sampling DecideSampling(const PerceptualMetric& metric,
                        const QuantTableSet& set, const OptimizerConfig& cfg) {
  if (!cfg.allow_yuv420) return Sampling::kYuv444;
  Provenance prov;
  prov.sampling = Sampling::kYuv420;
  const CandidateJpeg cand = EvaluateCandidate(
      ForwardTransform(metric.reference(), set[0], Sampling::kYuv420), metric,
      prov);
  return cand.distance <= cfg.alpha * cfg.target_distance ? Sampling::kYuv420
                                                          : Sampling::kYuv444;
}

Selection SelectBest(const std::vector<CandidateJpeg>& candidates,
                     double target_distance) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  const CandidateJpeg* best = nullptr;
  for (const CandidateJpeg& c : candidates) {
    if (c.distance > target_distance) continue;
    if (!best || c.size() < best->size() ||
        (c.size() == best->size() && c.distance < best->distance)) {
      best = &c;
    }
  }
  if (best) return Selection{*best, false};
  for (const CandidateJpeg& c : candidates) {
    if (!best || c.distance < best->distance ||
        (c.distance == best->distance && c.size() < best->size())) {
      best = &c;
    }
  }
  return Selection{*best, true};
}

PerceptualResult EncodePerceptual(const RgbImage& img,
                                  const OptimizerConfig& cfg) {
  cfg.Validate();
  const PerceptualMetric metric(img);
  const QuantTableSet set = BuildTableSet(cfg.table_set_size);

  PerceptualResult result;
  result.sampling = DecideSampling(metric, set, cfg);

  std::vector<CandidateJpeg> candidates;
  if (cfg.fixed_table_index) {
    result.table_index = *cfg.fixed_table_index;
  } else {
    GlobalSelection global = SelectGlobalTable(metric, set, cfg, result.sampling);
    result.table_index = global.table_index;
    result.budget_infeasible = global.budget_infeasible;
    for (const CandidateJpeg& c : global.candidates) {
      if (c.distance <= cfg.target_distance &&
          (!result.global_phase_best_size ||
           c.size() < *result.global_phase_best_size)) {
        result.global_phase_best_size = c.size();
      }
    }
    candidates = std::move(global.candidates);
  }

  const CoeffImage pristine =
      ForwardTransform(img, set[result.table_index], result.sampling);
  LocalResult local = LocalOptimize(metric, pristine, result.table_index, cfg);
  result.local_rounds = local.rounds;
  for (CandidateJpeg& c : local.candidates) candidates.push_back(std::move(c));
  result.candidates_evaluated = candidates.size();

  Selection best = SelectBest(candidates, cfg.target_distance);
  // Independent re-measurement from the emitted bytes.
  const DecodedJpeg decoded = Decode(best.candidate.jpeg.bytes);
  best.candidate.distance =
      GlobalDistance(ComputeDistanceMap(img, decoded.pixels));
  result.over_budget = best.candidate.distance > cfg.target_distance;
  result.best = std::move(best.candidate);
  return result;
}

}  // namespace pjpeg

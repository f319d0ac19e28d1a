/* Copyright 2026 The toric-pvf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <doctest.h>

#include <set>

#include "testutil.hpp"
#include "toric/classify.hpp"
#include "toric/oracle.hpp"

using namespace toric;
using testutil::lv;

TEST_SUITE_BEGIN("classify");

namespace {

std::vector<size_t> stratum_sizes(const Stratification& strat) {
  std::vector<size_t> sizes;
  for (const auto& stratum : strat.by_rank) sizes.push_back(stratum.size());
  return sizes;
}

std::set<std::vector<long long>> point_set(const std::vector<PointClass>& pcs) {
  std::set<std::vector<long long>> out;
  for (const auto& pc : pcs) out.insert(testutil::to_i64(pc.point));
  return out;
}

}  // namespace

TEST_CASE("classification of P2 sample points") {
  Fan p2 = projective_space(2);

  PointClass origin = classify_point(p2, lv({0, 0}));
  CHECK(origin.active.empty());
  CHECK(origin.rank == 0);
  CHECK(origin.basis_idx.empty());
  CHECK(origin.complement == std::vector<LatticeVector>{lv({1, 0}), lv({0, 1})});

  PointClass corner = classify_point(p2, lv({-1, -1}));
  CHECK(corner.active == std::vector<int>{0, 1});  // pairings -1, -1, +2
  CHECK(corner.rank == 2);
  CHECK(corner.basis_idx == std::vector<int>{0, 1});
  CHECK(corner.complement.empty());

  PointClass vertex = classify_point(p2, lv({2, -1}));
  CHECK(vertex.active == std::vector<int>{1, 2});  // pairings 2, -1, -1
  CHECK(vertex.rank == 2);

  PointClass edge = classify_point(p2, lv({0, -1}));
  CHECK(edge.active == std::vector<int>{1});
  CHECK(edge.rank == 1);
  CHECK(edge.basis_idx == std::vector<int>{1});
  CHECK(edge.complement == std::vector<LatticeVector>{lv({1, 0})});
}

TEST_CASE("points outside the polytope are rejected") {
  CHECK_THROWS_WITH_AS(static_cast<void>(classify_point(projective_space(2), lv({3, 0}))),
                       "not in P_Delta", std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(classify_point(projective_space(2), lv({0, 0, 0}))),
                  std::invalid_argument);
}

TEST_CASE("stratum sizes on frozen cases") {
  CHECK(stratum_sizes(stratify_fan(projective_space(2))) == std::vector<size_t>{1, 6, 3});
  CHECK(stratum_sizes(stratify_fan(projective_space(1))) == std::vector<size_t>{1, 2});
  CHECK(stratum_sizes(stratify_fan(hirzebruch(1))) == std::vector<size_t>{1, 4, 4});
  CHECK(stratum_sizes(stratify_fan(hirzebruch(3))) == std::vector<size_t>{1, 6, 2});
  CHECK(stratum_sizes(stratify_fan(projective_space(3))) ==
        std::vector<size_t>{1, 12, 18, 4});
}

TEST_CASE("edge interiors of the first Hirzebruch surface") {
  Stratification strat = stratify_fan(hirzebruch(1));
  CHECK(point_set(strat.by_rank[1]) ==
        std::set<std::vector<long long>>{{-1, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("s_k concatenates strata in canonical order") {
  Fan p2 = projective_space(2);
  Stratification strat = stratify_fan(p2);
  for (const auto& [name, fan] : testutil::standard_test_fans()) {
    Stratification s = stratify_fan(fan);
    auto s0 = s_k(s, 0);
    REQUIRE_MESSAGE(s0.size() == 1, name);  // S_0 = {0}
    CHECK_MESSAGE(s0[0].point == LatticeVector(fan.dim, 0), name);
  }
  CHECK(s_k(strat, 1).size() == 7);
  CHECK(s_k(strat, 2).size() == 10);
  CHECK_THROWS_AS(s_k(strat, 3), std::invalid_argument);
  CHECK_THROWS_AS(s_k(strat, -1), std::invalid_argument);
}

TEST_CASE("strata are disjoint, exhaustive and nested") {
  for (const auto& [name, fan] : testutil::standard_test_fans()) {
    Stratification strat = stratify_fan(fan);
    HalfspaceSystem hs = build_halfspaces(fan);
    LatticePointSet pts = enumerate_lattice_points(hs, bounding_box(hs));
    CHECK_MESSAGE(strat.total() == pts.points.size(), name);

    std::set<std::vector<long long>> seen;
    for (const auto& stratum : strat.by_rank)
      for (const auto& pc : stratum) CHECK(seen.insert(testutil::to_i64(pc.point)).second);

    // S_0 <= S_1 <= ... <= S_n = S and S_{k+1} = S_k u S(k+1)
    auto prev = point_set(s_k(strat, 0));
    for (int k = 1; k <= fan.dim; ++k) {
      auto cur = point_set(s_k(strat, k));
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      auto fresh = point_set(strat.by_rank[k]);
      CHECK(cur.size() == prev.size() + fresh.size());
      prev = cur;
    }
    std::set<std::vector<long long>> all;
    for (const auto& p : pts.points) all.insert(testutil::to_i64(p));
    CHECK(prev == all);
  }
}

TEST_CASE("active sets and ranks follow the defining equations") {
  for (const auto& [name, fan] : testutil::standard_test_fans()) {
    Stratification strat = stratify_fan(fan);
    for (int i = 0; i <= fan.dim; ++i)
      for (const auto& pc : strat.by_rank[i]) {
        // recompute E_I directly from the pairings
        std::vector<int> active;
        for (size_t t = 0; t < fan.rays.size(); ++t) {
          Int pairing = dot(pc.point, fan.rays[t]);
          CHECK(pairing >= -1);
          if (pairing == -1) active.push_back(static_cast<int>(t));
        }
        CHECK(active == pc.active);
        IntMatrix active_rays;
        for (int t : pc.active) active_rays.push_back(fan.rays[t]);
        CHECK(rank(active_rays) == i);
        // basis_idx spans the same space
        IntMatrix basis_rays;
        for (int t : pc.basis_idx) basis_rays.push_back(fan.rays[t]);
        CHECK(rank(basis_rays) == i);
        CHECK(static_cast<int>(basis_rays.size()) == i);
        CHECK(pc.complement.size() == static_cast<size_t>(fan.dim - i));
      }
  }
}

TEST_CASE("greedy basis choice is reproducible") {
  for (const auto& [name, fan] : testutil::standard_test_fans()) {
    Stratification strat = stratify_fan(fan);
    for (const auto& stratum : strat.by_rank)
      for (const auto& pc : stratum) {
        IntMatrix kept;
        std::vector<int> expected;
        for (int t : pc.active) {
          kept.push_back(fan.rays[t]);
          if (rank(kept) == static_cast<int>(kept.size()))
            expected.push_back(t);
          else
            kept.pop_back();
        }
        CHECK(expected == pc.basis_idx);
      }
  }
}

TEST_CASE("per-cone tight sets agree with the chart pairings") {
  for (const auto& [name, fan] : testutil::standard_test_fans()) {
    Stratification strat = stratify_fan(fan);
    std::vector<ChartData> charts;
    for (size_t c = 0; c < fan.max_cones.size(); ++c)
      charts.push_back(chart_data(fan, static_cast<int>(c)));
    for (const auto& stratum : strat.by_rank)
      for (const auto& pc : stratum) {
        IntMatrix stacked;
        for (const auto& chart : charts) {
          auto m = chart_exponents(chart, pc.point);
          int tight = 0;
          for (int t = 0; t < fan.dim; ++t)
            if (m[t] == -1) {
              ++tight;
              stacked.push_back(chart.rays[t]);
              // E_I(sigma) is contained in E_I(Delta)
              CHECK(std::find(pc.active.begin(), pc.active.end(), chart.cone[t]) !=
                    pc.active.end());
            }
          CHECK(tight <= fan.dim);
        }
        // the per-cone tight rays span F_I^perp
        CHECK(rank(stacked) == pc.rank);
      }
  }
}

TEST_CASE("S_k lies inside every chart's S_k") {
  for (const auto& [name, fan] : testutil::standard_test_fans()) {
    Stratification strat = stratify_fan(fan);
    std::vector<ChartData> charts;
    for (size_t c = 0; c < fan.max_cones.size(); ++c)
      charts.push_back(chart_data(fan, static_cast<int>(c)));
    for (int k = 0; k <= fan.dim; ++k)
      for (const auto& pc : s_k(strat, k))
        for (const auto& chart : charts) {
          auto m = chart_exponents(chart, pc.point);
          int tight = 0;
          for (const auto& e : m) {
            CHECK(e >= -1);
            if (e == -1) ++tight;
          }
          CHECK(tight <= k);
        }
  }
}

TEST_CASE("face groups refine the rank strata") {
  for (const auto& [name, fan] : testutil::standard_test_fans()) {
    Stratification strat = stratify_fan(fan);
    size_t total = 0;
    for (const auto& [active, points] : strat.face_groups) {
      total += points.size();
      IntMatrix rays;
      for (int t : active) rays.push_back(fan.rays[t]);
      int r = rank(rays);
      for (const auto& p : points) CHECK(classify_point(fan, p).rank == r);
    }
    CHECK(total == strat.total());
    // number of rank-i groups = number of (n-i)-faces with interior points
    for (int i = 0; i <= fan.dim; ++i) {
      std::set<std::vector<int>> actives;
      for (const auto& pc : strat.by_rank[i]) actives.insert(pc.active);
      size_t groups = 0;
      for (const auto& [active, points] : strat.face_groups) {
        IntMatrix rays;
        for (int t : active) rays.push_back(fan.rays[t]);
        if (rank(rays) == i) ++groups;
      }
      CHECK(groups == actives.size());
    }
  }
}

TEST_SUITE_END();

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

#include "testutil.hpp"
#include "toric/oracle.hpp"

using namespace toric;
using testutil::lv;

TEST_SUITE_BEGIN("generators");

TEST_CASE("projective space fans") {
  Fan p1 = projective_space(1);
  CHECK(p1.rays == std::vector<LatticeVector>{lv({1}), lv({-1})});

  Fan p2 = projective_space(2);
  CHECK(p2.rays == std::vector<LatticeVector>{lv({1, 0}), lv({0, 1}), lv({-1, -1})});
  CHECK(p2.max_cones.size() == 3);

  Fan p3 = projective_space(3);
  CHECK(p3.rays.size() == 4);
  CHECK(p3.max_cones.size() == 4);
  for (const auto& cone : p3.max_cones) {
    IntMatrix m;
    for (int idx : cone) m.push_back(p3.rays[idx]);
    Int d = det(m);
    CHECK((d == 1 || d == -1));
  }
  CHECK_THROWS_AS(projective_space(0), std::invalid_argument);
}

TEST_CASE("product fans") {
  Fan sq = product_projective({1, 1});
  CHECK(sq.rays ==
        std::vector<LatticeVector>{lv({1, 0}), lv({-1, 0}), lv({0, 1}), lv({0, -1})});
  CHECK(sq.max_cones.size() == 4);

  Fan p2xp1 = product_projective({2, 1});
  CHECK(p2xp1.dim == 3);
  CHECK(p2xp1.rays.size() == 5);
  CHECK(p2xp1.max_cones.size() == 6);

  CHECK_THROWS_AS(product_projective({}), std::invalid_argument);
  CHECK_THROWS_AS(product_projective({1, 0}), std::invalid_argument);
}

TEST_CASE("hirzebruch fans") {
  Fan f2 = hirzebruch(2);
  CHECK(f2.rays ==
        std::vector<LatticeVector>{lv({1, 0}), lv({0, 1}), lv({-1, 2}), lv({0, -1})});
  CHECK(f2.max_cones ==
        std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_THROWS_AS(hirzebruch(-1), std::invalid_argument);
}

TEST_CASE("every generated fan validates") {
  for (const auto& [name, fan] : testutil::standard_test_fans()) {
    ValidationReport report = validate(fan);
    CHECK_MESSAGE(report.ok(), name);
  }
}

TEST_CASE("hirzebruch(0) and P1xP1 share their dimension table") {
  DimensionTable f0 = dims_by_face_formula(stratify_fan(hirzebruch(0)));
  DimensionTable sq = dims_by_face_formula(stratify_fan(product_projective({1, 1})));
  CHECK(f0 == sq);
  CHECK(f0.dims == std::vector<long long>{1, 6, 9});
}

TEST_CASE("hirzebruch k=1 and k=2 dimensions") {
  CHECK(dims_by_face_formula(stratify_fan(hirzebruch(1))).dims[1] == 6);
  CHECK(dims_by_face_formula(stratify_fan(hirzebruch(3))).dims[2] == 9);
  Stratification f3 = stratify_fan(hirzebruch(3));
  CHECK(dims_by_face_formula(f3).dims[2] == static_cast<long long>(f3.total()));
}

TEST_CASE("projective-space tables match the classical closed form") {
  // dim H^0(P^n, wedge^k T) = C(n+k+1, n+1) * C(n, k)
  for (int n = 1; n <= 4; ++n) {
    DimensionTable table = dims_by_face_formula(stratify_fan(projective_space(n)));
    for (int k = 0; k <= n; ++k)
      CHECK_MESSAGE(table.dims[k] == binomial64(n + k + 1, n + 1) * binomial64(n, k),
                    "n=", n, " k=", k);
  }
}

TEST_CASE("product tables are the convolution of the factor tables") {
  // sections of a box product split, so dim_k(X x Y) = sum over a+b=k of
  // dim_a(X) * dim_b(Y)
  auto table_of = [](const Fan& fan) {
    return dims_by_face_formula(stratify_fan(fan)).dims;
  };
  const std::vector<std::vector<int>> products = {{1, 1}, {2, 1}, {1, 1, 1}, {3, 1}};
  for (const auto& dims : products) {
    std::vector<long long> expected{1};
    for (int d : dims) {
      std::vector<long long> factor = table_of(projective_space(d));
      std::vector<long long> next(expected.size() + factor.size() - 1, 0);
      for (size_t a = 0; a < expected.size(); ++a)
        for (size_t b = 0; b < factor.size(); ++b) next[a + b] += expected[a] * factor[b];
      expected = std::move(next);
    }
    CHECK(table_of(product_projective(dims)) == expected);
  }
  // frozen instances of the rule
  CHECK(table_of(product_projective({2, 1})) == std::vector<long long>{1, 11, 34, 30});
  CHECK(table_of(product_projective({1, 1, 1})) == std::vector<long long>{1, 9, 27, 27});
}

TEST_CASE("vector fields on projective space have dimension n^2 + 2n") {
  for (int n = 1; n <= 4; ++n) {
    Fan fan = projective_space(n);
    Stratification strat = stratify_fan(fan);
    long long expected = static_cast<long long>(n) * n + 2 * n;
    CHECK(dims_entry_by_face_formula(strat, 1) == expected);
    // confirmed by both oracles on every weight of S_1
    long long kernel_total = 0, chart_total = 0;
    for (const auto& pc : s_k(strat, 1)) {
      kernel_total += weight_space_dim_by_kernel(fan, pc, 1);
      chart_total += weight_space_dim_by_charts(fan, pc.point, 1);
    }
    CHECK(kernel_total == expected);
    CHECK(chart_total == expected);
  }
}

TEST_SUITE_END();

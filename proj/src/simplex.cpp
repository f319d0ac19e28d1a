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

#include "toric/simplex.hpp"

namespace toric {

LpResult maximize_with_pairing_bounds(const std::vector<LatticeVector>& normals, int n,
                                      const std::vector<Rational>& objective) {
  if (static_cast<int>(objective.size()) != n)
    throw std::invalid_argument("simplex: objective length mismatch");
  const int m = static_cast<int>(normals.size());
  if (m == 0) {
    // no constraints: bounded only for the zero objective
    bool zero = true;
    for (const auto& c : objective)
      if (c != 0) zero = false;
    return {zero, Rational(0)};
  }
  for (const auto& a : normals)
    if (static_cast<int>(a.size()) != n)
      throw std::invalid_argument("simplex: normal length mismatch");

  // x = u - w with u, w >= 0. <x, a_i> >= -1 becomes
  // -a_i.u + a_i.w + s_i = 1, s_i >= 0; the slack basis is feasible.
  // Columns: [0,n) u, [n,2n) w, [2n,2n+m) slacks, last column rhs.
  const int ncols = 2 * n + m;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(ncols + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      tab[i][j] = Rational(-normals[i][j]);
      tab[i][n + j] = Rational(normals[i][j]);
    }
    tab[i][2 * n + i] = 1;
    tab[i][ncols] = 1;
  }
  // Reduced-cost row for minimizing -objective; its rhs cell carries the
  // current maximum of the original objective.
  std::vector<Rational> cost(ncols + 1, Rational(0));
  for (int j = 0; j < n; ++j) {
    cost[j] = -objective[j];
    cost[n + j] = objective[j];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = 2 * n + i;

  while (true) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j)
      if (cost[j] < 0) {
        enter = j;  // Bland: lowest eligible index
        break;
      }
    if (enter < 0) return {true, cost[ncols]};

    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][ncols] / tab[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return {false, Rational(0)};  // unbounded direction

    Rational pivot = tab[leave][enter];
    for (int j = 0; j <= ncols; ++j) tab[leave][j] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (int j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (int j = 0; j <= ncols; ++j) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
}

}  // namespace toric

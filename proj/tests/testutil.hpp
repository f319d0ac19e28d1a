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

#ifndef TORIC_TESTS_TESTUTIL_HPP_
#define TORIC_TESTS_TESTUTIL_HPP_

#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toric/generators.hpp"
#include "toric/linalg.hpp"

// Test-side helpers. The rank / kernel oracles here are written against the
// same math but share no code with the library (plain int64 elimination,
// removal-form wedge signs) so they can serve as independent checks.
namespace toric::testutil {

inline LatticeVector lv(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<long long> to_i64(const LatticeVector& v) {
  std::vector<long long> out;
  for (const auto& c : v) out.push_back(to_int64(c));
  return out;
}

// Fraction-free elimination over int64 with gcd trimming; independent of the
// library's Bareiss code.
inline int rank_i64(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      long long a = m[r][c], b = m[i][c];
      long long g = std::gcd(a, b);
      long long fa = b / g, fb = a / g;
      for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] * fb - m[r][j] * fa;
    }
    ++r;
  }
  return r;
}

inline void combos_rec(int n, int k, int start, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combos_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> combos(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 0 && k <= n) combos_rec(n, k, 0, cur, out);
  return out;
}

inline long long binom_i64(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Independent kernel-dimension oracle: rows of the stacked system are built
// in removal form (iterate (k+1)-subsets T, drop one element; removing
// position j of T costs sign (-1)^(k-j)).
inline int kernel_dim_oracle(int n, int k, const std::vector<std::vector<long long>>& vecs) {
  if (k < 0 || k > n) return 0;
  if (k == n || vecs.empty()) return static_cast<int>(binom_i64(n, k));
  auto doms = combos(n, k);
  auto tars = combos(n, k + 1);
  std::vector<std::vector<long long>> rows;
  for (const auto& v : vecs) {
    for (const auto& t : tars) {
      std::vector<long long> row(doms.size(), 0);
      for (int j = 0; j <= k; ++j) {
        std::vector<int> s = t;
        s.erase(s.begin() + j);
        long long sign = ((k - j) % 2 == 0) ? 1 : -1;
        auto it = std::lower_bound(doms.begin(), doms.end(), s);
        row[it - doms.begin()] += sign * v[t[j]];
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(doms.size()) - rank_i64(rows);
}

inline IntMatrix identity_matrix(int n) {
  IntMatrix m(n, LatticeVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Random element of GL(n, Z) as a short product of elementary operations;
// entries stay small.
inline IntMatrix random_unimodular(int n, std::mt19937& rng) {
  IntMatrix u = identity_matrix(n);
  std::uniform_int_distribution<int> row(0, n - 1), op(0, 2), coin(0, 1);
  for (int step = 0; step < 3 * n; ++step) {
    int i = row(rng), j = row(rng);
    switch (op(rng)) {
      case 0:
        if (i != j) {
          int sign = coin(rng) ? 1 : -1;
          for (int c = 0; c < n; ++c) u[i][c] += sign * u[j][c];
        }
        break;
      case 1:
        std::swap(u[i], u[j]);
        break;
      default:
        for (int c = 0; c < n; ++c) u[i][c] = -u[i][c];
    }
  }
  return u;
}

inline Fan transform_fan(const Fan& fan, const IntMatrix& u) {
  Fan out = fan;
  for (auto& ray : out.rays) ray = mat_vec(u, ray);
  return out;
}

// Action on weights matching ray transform u: I -> (u^-1)^T I, preserving all
// pairings.
inline LatticeVector transform_weight(const IntMatrix& u, const LatticeVector& w) {
  return mat_vec(transpose(inverse_unimodular(u)), w);
}

// Named fan instances shared by the suites.
inline std::vector<std::pair<std::string, Fan>> standard_test_fans() {
  return {
      {"P1", projective_space(1)},
      {"P2", projective_space(2)},
      {"P3", projective_space(3)},
      {"F0", hirzebruch(0)},
      {"F1", hirzebruch(1)},
      {"F2", hirzebruch(2)},
      {"F3", hirzebruch(3)},
      {"P1xP1", product_projective({1, 1})},
      {"P2xP1", product_projective({2, 1})},
  };
}

}  // namespace toric::testutil

#endif  // TORIC_TESTS_TESTUTIL_HPP_

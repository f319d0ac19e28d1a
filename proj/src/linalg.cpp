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

#include "toric/linalg.hpp"

#include <algorithm>
#include <utility>

namespace toric {

Int dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: mismatched lengths");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector stdbasis_vector(int n, int j) {
  LatticeVector v(n, 0);
  v[j] = 1;
  return v;
}

LatticeVector primitive(const LatticeVector& v) {
  Int g = 0;
  for (const Int& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw std::invalid_argument("zero ray");
  LatticeVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

namespace {

void check_rectangular(const IntMatrix& rows) {
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw std::invalid_argument("matrix rows have mismatched lengths");
}

// Bareiss elimination in place. Returns the rank; if swap_sign is non-null it
// accumulates the row-swap parity (+1/-1) for determinant use.
int bareiss(IntMatrix& m, int* swap_sign = nullptr) {
  if (m.empty()) return 0;
  check_rectangular(m);
  const size_t rows = m.size(), cols = m.front().size();
  Int prev = 1;
  size_t r = 0;
  if (swap_sign) *swap_sign = 1;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (swap_sign) *swap_sign = -*swap_sign;
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;  // exact by Sylvester
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rank(const IntMatrix& rows) {
  IntMatrix m = rows;
  return bareiss(m);
}

Int det(const IntMatrix& square) {
  const size_t n = square.size();
  for (const auto& row : square)
    if (row.size() != n) throw std::invalid_argument("det: matrix not square");
  if (n == 0) return 1;
  IntMatrix m = square;
  int sign = 1;
  int r = bareiss(m, &sign);
  if (static_cast<size_t>(r) < n) return 0;
  return sign * m[n - 1][n - 1];  // last Bareiss pivot is the determinant
}

IntMatrix row_reduce(IntMatrix rows) {
  int r = bareiss(rows);
  rows.resize(r);
  return rows;
}

std::vector<LatticeVector> extend_to_basis(const std::vector<LatticeVector>& independent, int n) {
  for (const auto& v : independent)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("extend_to_basis: vector length mismatch");
  IntMatrix cur = independent;
  int r = rank(cur);
  if (r != static_cast<int>(cur.size()))
    throw std::invalid_argument("extend_to_basis: input not linearly independent");
  std::vector<LatticeVector> added;
  for (int j = 0; j < n && r < n; ++j) {
    cur.push_back(stdbasis_vector(n, j));
    int r2 = rank(cur);
    if (r2 > r) {
      added.push_back(cur.back());
      r = r2;
    } else {
      cur.pop_back();
    }
  }
  return added;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("inverse: matrix not square");
  // Gauss-Jordan over Q on [m | I]; entries of the result must come out
  // integral when det(m) = +-1.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("inverse: singular matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (size_t j = 0; j < 2 * n; ++j) a[c][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix out(n, LatticeVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Rational& q = a[i][n + j];
      if (q.get_den() != 1)
        throw std::invalid_argument("inverse: matrix is not unimodular");
      out[i][j] = q.get_num();
    }
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  check_rectangular(m);
  IntMatrix t(m.front().size(), LatticeVector(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.front().size(); ++j) t[j][i] = m[i][j];
  return t;
}

LatticeVector mat_vec(const IntMatrix& m, const LatticeVector& v) {
  LatticeVector out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

}  // namespace toric

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

#include "toric/multivector.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

std::vector<IndexSubset> subsets_lex(int n, int k) {
  std::vector<IndexSubset> out;
  if (k < 0 || k > n) return out;
  IndexSubset cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // advance the rightmost index that still has room
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Multivector::Multivector(int ambient_dim, int grade) : n_(ambient_dim), k_(grade) {
  if (ambient_dim < 0 || grade < 0 || grade > ambient_dim)
    throw std::invalid_argument("multivector grade out of range");
  if (ambient_dim > kMaxAmbientDim)
    throw std::invalid_argument("ambient dimension above " +
                                std::to_string(kMaxAmbientDim) + " not supported");
}

Multivector Multivector::scalar(int ambient_dim, const Rational& c) {
  Multivector x(ambient_dim, 0);
  x.add_term({}, c);
  return x;
}

Multivector Multivector::monomial(int ambient_dim, const IndexSubset& subset, const Rational& c) {
  Multivector x(ambient_dim, static_cast<int>(subset.size()));
  x.add_term(subset, c);
  return x;
}

Multivector Multivector::from_vector(const LatticeVector& v) {
  Multivector x(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) x.add_term({static_cast<int>(i)}, Rational(v[i]));
  return x;
}

Rational Multivector::coefficient(const IndexSubset& s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(const IndexSubset& subset, const Rational& c) {
  if (static_cast<int>(subset.size()) != k_)
    throw std::invalid_argument("term grade mismatch");
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= n_) throw std::invalid_argument("axis out of range");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw std::invalid_argument("subset not strictly increasing");
  }
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(subset, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& other) {
  if (other.n_ != n_ || other.k_ != k_)
    throw std::invalid_argument("multivector shape mismatch");
  for (const auto& [s, c] : other.coeffs_) add_term(s, c);
  return *this;
}

Multivector Multivector::scaled(const Rational& c) const {
  Multivector out(n_, k_);
  if (c == 0) return out;
  for (const auto& [s, v] : coeffs_) out.coeffs_.emplace(s, v * c);
  return out;
}

bool Multivector::operator==(const Multivector& other) const {
  return n_ == other.n_ && k_ == other.k_ && coeffs_ == other.coeffs_;
}

std::string Multivector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : coeffs_) {
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1) && !s.empty();
    if (!unit) os << a.get_str();
    if (!s.empty()) {
      if (!unit) os << " ";
      os << "e(";
      for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
      os << ")";
    }
  }
  return os.str();
}

Multivector wedge(const Multivector& x, const std::vector<Rational>& v) {
  const int n = x.ambient_dim();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("wedge: vector length mismatch");
  if (x.grade() >= n) throw std::invalid_argument("wedge: grade overflow");
  Multivector out(n, x.grade() + 1);
  for (const auto& [s, c] : x.coefficients()) {
    for (int t = 0; t < n; ++t) {
      if (v[t] == 0) continue;
      if (std::binary_search(s.begin(), s.end(), t)) continue;  // e_t ^ e_t = 0
      // moving e_t into sorted position passes one factor per index above t
      size_t above = s.end() - std::upper_bound(s.begin(), s.end(), t);
      IndexSubset s2 = s;
      s2.insert(std::upper_bound(s2.begin(), s2.end(), t), t);
      Rational term = c * v[t];
      if (above % 2) term = -term;
      out.add_term(s2, term);
    }
  }
  return out;
}

Multivector wedge(const Multivector& x, const LatticeVector& v) {
  std::vector<Rational> q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return wedge(x, q);
}

Multivector wedge_all(int n, const std::vector<LatticeVector>& vs) {
  Multivector x = Multivector::scalar(n, Rational(1));
  for (const auto& v : vs) x = wedge(x, v);
  return x;
}

int kernel_dim_of_wedge_maps(int n, int k, const std::vector<LatticeVector>& vectors) {
  if (k < 0) throw std::invalid_argument("kernel_dim_of_wedge_maps: negative grade");
  if (n > kMaxAmbientDim)
    throw std::invalid_argument("ambient dimension above " +
                                std::to_string(kMaxAmbientDim) + " not supported");
  if (k > n) return 0;
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("kernel_dim_of_wedge_maps: vector length mismatch");
  const long long cols64 = binomial64(n, k);
  const int cols = static_cast<int>(cols64);
  if (k == n || vectors.empty()) return cols;  // constraints vacuous

  const auto dom = subsets_lex(n, k);
  std::map<IndexSubset, int> target_index;
  {
    int idx = 0;
    for (const auto& t : subsets_lex(n, k + 1)) target_index.emplace(t, idx++);
  }
  const int target_count = static_cast<int>(target_index.size());

  // One block of rows per constraint vector: column j holds e_{S_j} ^ v
  // scattered over the wedge^{k+1} basis.
  IntMatrix sys;
  sys.reserve(vectors.size() * target_count);
  for (const auto& v : vectors) {
    IntMatrix block(target_count, LatticeVector(cols, 0));
    for (int j = 0; j < cols; ++j) {
      Multivector img = wedge(Multivector::monomial(n, dom[j]), v);
      for (const auto& [t, c] : img.coefficients()) {
        // integer inputs stay integer under wedge
        block[target_index.at(t)][j] = c.get_num();
      }
    }
    for (auto& row : block) sys.push_back(std::move(row));
  }
  return cols - rank(sys);
}

}  // namespace toric

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

#include "toric/pvf.hpp"

namespace toric {

bool DimensionTable::operator==(const DimensionTable& other) const {
  return dim == other.dim && dims == other.dims;
}

WeightSpaceBasis weight_space(const Fan& fan, const PointClass& pc, int k) {
  const int n = fan.dim;
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  WeightSpaceBasis ws;
  ws.weight = pc.point;
  ws.grade = k;
  ws.rank = pc.rank;
  const int i = pc.rank;
  if (i > k) {
    ws.dim = 0;
    return ws;
  }
  ws.dim = binomial64(n - i, k - i);
  if (i == 0) {
    // T-invariant fields: every standard wedge monomial
    for (const auto& s : subsets_lex(n, k))
      ws.generators.push_back(Multivector::monomial(n, s));
  } else {
    std::vector<LatticeVector> basis_rays;
    for (int t : pc.basis_idx) basis_rays.push_back(fan.rays[t]);
    const Multivector lead = wedge_all(n, basis_rays);
    const int c = static_cast<int>(pc.complement.size());  // n - i
    for (const auto& pick : subsets_lex(c, k - i)) {
      Multivector g = lead;
      for (int j : pick) g = wedge(g, pc.complement[j]);
      ws.generators.push_back(std::move(g));
    }
  }
  if (static_cast<long long>(ws.generators.size()) != ws.dim)
    throw std::logic_error("weight space generator count disagrees with C(n-i,k-i)");
  return ws;
}

long long dims_entry_by_face_formula(const Stratification& strat, int k) {
  if (k < 0 || k > strat.dim) throw std::invalid_argument("k out of range");
  long long sum = 0;
  for (int i = 0; i <= k; ++i)
    sum += binomial64(strat.dim - i, k - i) * static_cast<long long>(strat.by_rank[i].size());
  return sum;
}

DimensionTable dims_by_face_formula(const Stratification& strat) {
  DimensionTable table;
  table.dim = strat.dim;
  for (int k = 0; k <= strat.dim; ++k) {
    std::vector<DimensionTable::Term> terms;
    long long sum = 0;
    for (int i = 0; i <= k; ++i) {
      DimensionTable::Term t;
      t.stratum = i;
      t.points = static_cast<long long>(strat.by_rank[i].size());
      t.binom = binomial64(strat.dim - i, k - i);
      t.product = t.points * t.binom;
      sum += t.product;
      terms.push_back(t);
    }
    table.dims.push_back(sum);
    table.breakdown.push_back(std::move(terms));
  }
  return table;
}

std::vector<WeightSpaceBasis> decomposition(const Fan& fan, const Stratification& strat, int k) {
  std::vector<WeightSpaceBasis> out;
  for (const PointClass& pc : s_k(strat, k)) out.push_back(weight_space(fan, pc, k));
  return out;
}

std::vector<WeightSpaceBasis> decomposition(const Fan& fan, int k) {
  return decomposition(fan, stratify_fan(fan), k);
}

}  // namespace toric

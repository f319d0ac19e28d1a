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

#include "toric/classify.hpp"

namespace toric {

size_t Stratification::total() const {
  size_t s = 0;
  for (const auto& stratum : by_rank) s += stratum.size();
  return s;
}

PointClass classify_point(const Fan& fan, const LatticeVector& point) {
  if (static_cast<int>(point.size()) != fan.dim)
    throw std::invalid_argument("point dimension mismatch");
  PointClass pc;
  pc.point = point;
  for (size_t t = 0; t < fan.rays.size(); ++t) {
    Int pairing = dot(point, fan.rays[t]);
    if (pairing < -1) throw std::invalid_argument("not in P_Delta");
    if (pairing == -1) pc.active.push_back(static_cast<int>(t));
  }
  // greedy independent subset, smallest ray indices first
  IntMatrix kept;
  for (int t : pc.active) {
    kept.push_back(fan.rays[t]);
    if (rank(kept) == static_cast<int>(kept.size())) {
      pc.basis_idx.push_back(t);
    } else {
      kept.pop_back();
    }
  }
  pc.rank = static_cast<int>(kept.size());
  pc.complement = extend_to_basis(kept, fan.dim);
  return pc;
}

Stratification stratify(const Fan& fan, const LatticePointSet& pts) {
  Stratification strat;
  strat.dim = fan.dim;
  strat.by_rank.assign(fan.dim + 1, {});
  for (const auto& p : pts.points) {
    PointClass pc = classify_point(fan, p);
    strat.face_groups[pc.active].push_back(p);
    strat.by_rank[pc.rank].push_back(std::move(pc));
  }
  return strat;  // enumeration order is lex, so each stratum stays lex sorted
}

Stratification stratify_fan(const Fan& fan) {
  HalfspaceSystem hs = build_halfspaces(fan);
  BoundingBox box = bounding_box(hs);
  return stratify(fan, enumerate_lattice_points(hs, box));
}

std::vector<PointClass> s_k(const Stratification& strat, int k) {
  if (k < 0 || k > strat.dim) throw std::invalid_argument("k out of range");
  std::vector<PointClass> out;
  for (int i = 0; i <= k; ++i)
    out.insert(out.end(), strat.by_rank[i].begin(), strat.by_rank[i].end());
  return out;
}

}  // namespace toric

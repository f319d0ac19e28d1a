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

#ifndef TORIC_POLYTOPE_HPP_
#define TORIC_POLYTOPE_HPP_

#include <vector>

#include "toric/fan.hpp"

namespace toric {

// The inequality system <I, normal_t> >= -1, one row per ray in ray order.
// The right-hand side is the constant -1 for every row.
struct HalfspaceSystem {
  int dim = 0;
  std::vector<LatticeVector> normals;

  bool contains(const LatticeVector& point) const;
};

// Per-coordinate inclusive integer bounds, each certified by an exact LP
// optimum over the rational polyhedron.
struct BoundingBox {
  std::vector<Int> lo;
  std::vector<Int> hi;

  bool empty() const;
};

// The lattice points of the polytope, lexicographically sorted.
struct LatticePointSet {
  std::vector<LatticeVector> points;
};

/// One inequality per ray of a validated fan.
HalfspaceSystem build_halfspaces(const Fan& fan);

/// The subsystem cut out by a single maximal cone's rays.
HalfspaceSystem cone_halfspaces(const Fan& fan, int cone_index);

/// Exact simplex bounds per coordinate: hi_j = floor(max x_j),
/// lo_j = ceil(min x_j). Throws if some direction is unbounded.
BoundingBox bounding_box(const HalfspaceSystem& hs);

BoundingBox inflate(const BoundingBox& box, const Int& margin);

/// Scans the box and keeps the integer points satisfying every inequality.
LatticePointSet enumerate_lattice_points(const HalfspaceSystem& hs, const BoundingBox& box);

/// Calls fn on every integer point of the box in lexicographic order.
template <typename Fn>
void for_each_box_point(const BoundingBox& box, Fn&& fn) {
  if (box.empty()) return;
  const int n = static_cast<int>(box.lo.size());
  LatticeVector cur = box.lo;
  while (true) {
    fn(const_cast<const LatticeVector&>(cur));
    int j = n - 1;
    while (j >= 0) {
      cur[j] += 1;
      if (cur[j] <= box.hi[j]) break;
      cur[j] = box.lo[j];
      --j;
    }
    if (j < 0) break;
  }
}

}  // namespace toric

#endif  // TORIC_POLYTOPE_HPP_

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

#include "toric/polytope.hpp"

#include "toric/simplex.hpp"

namespace toric {

bool HalfspaceSystem::contains(const LatticeVector& point) const {
  for (const auto& normal : normals)
    if (dot(point, normal) < -1) return false;
  return true;
}

bool BoundingBox::empty() const {
  for (size_t j = 0; j < lo.size(); ++j)
    if (hi[j] < lo[j]) return true;
  return lo.empty();
}

HalfspaceSystem build_halfspaces(const Fan& fan) {
  ensure_valid(fan);
  return {fan.dim, fan.rays};
}

HalfspaceSystem cone_halfspaces(const Fan& fan, int cone_index) {
  if (cone_index < 0 || cone_index >= static_cast<int>(fan.max_cones.size()))
    throw std::invalid_argument("cone index out of range");
  HalfspaceSystem hs;
  hs.dim = fan.dim;
  for (int idx : fan.max_cones[cone_index]) hs.normals.push_back(fan.rays[idx]);
  return hs;
}

BoundingBox bounding_box(const HalfspaceSystem& hs) {
  BoundingBox box;
  const int n = hs.dim;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> obj(n, Rational(0));
    obj[j] = 1;
    LpResult up = maximize_with_pairing_bounds(hs.normals, n, obj);
    obj[j] = -1;
    LpResult down = maximize_with_pairing_bounds(hs.normals, n, obj);
    if (!up.bounded || !down.bounded)
      throw std::runtime_error("polytope unbounded: fan not complete");
    box.hi.push_back(floor_of(up.value));
    box.lo.push_back(ceil_of(-down.value));
  }
  return box;
}

BoundingBox inflate(const BoundingBox& box, const Int& margin) {
  BoundingBox out = box;
  for (size_t j = 0; j < out.lo.size(); ++j) {
    out.lo[j] -= margin;
    out.hi[j] += margin;
  }
  return out;
}

LatticePointSet enumerate_lattice_points(const HalfspaceSystem& hs, const BoundingBox& box) {
  LatticePointSet out;
  for_each_box_point(box, [&](const LatticeVector& p) {
    if (hs.contains(p)) out.points.push_back(p);
  });
  return out;  // box scan is lexicographic already
}

}  // namespace toric

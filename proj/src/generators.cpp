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

#include "toric/generators.hpp"

#include "toric/multivector.hpp"

namespace toric {

Fan projective_space(int n) {
  if (n < 1) throw std::invalid_argument("projective_space: n must be at least 1");
  Fan fan;
  fan.dim = n;
  for (int j = 0; j < n; ++j) fan.rays.push_back(stdbasis_vector(n, j));
  fan.rays.push_back(LatticeVector(n, Int(-1)));
  for (auto& cone : subsets_lex(n + 1, n)) fan.max_cones.push_back(std::move(cone));
  ensure_valid(fan);
  return fan;
}

Fan product_projective(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("product_projective: empty factor list");
  std::vector<Fan> factors;
  for (int d : dims) factors.push_back(projective_space(d));

  Fan fan;
  for (int d : dims) fan.dim += d;
  std::vector<int> ray_offset, coord_offset;
  {
    int roff = 0, coff = 0;
    for (const Fan& f : factors) {
      ray_offset.push_back(roff);
      coord_offset.push_back(coff);
      roff += static_cast<int>(f.rays.size());
      coff += f.dim;
    }
  }
  for (size_t fi = 0; fi < factors.size(); ++fi)
    for (const auto& ray : factors[fi].rays) {
      LatticeVector embedded(fan.dim, 0);
      for (int j = 0; j < factors[fi].dim; ++j) embedded[coord_offset[fi] + j] = ray[j];
      fan.rays.push_back(std::move(embedded));
    }
  // cartesian product of factor cones, factor 0 slowest
  std::vector<size_t> pick(factors.size(), 0);
  while (true) {
    std::vector<int> cone;
    for (size_t fi = 0; fi < factors.size(); ++fi)
      for (int idx : factors[fi].max_cones[pick[fi]]) cone.push_back(ray_offset[fi] + idx);
    fan.max_cones.push_back(std::move(cone));
    int j = static_cast<int>(factors.size()) - 1;
    while (j >= 0) {
      if (++pick[j] < factors[j].max_cones.size()) break;
      pick[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  ensure_valid(fan);
  return fan;
}

Fan hirzebruch(long a) {
  if (a < 0) throw std::invalid_argument("hirzebruch: a must be nonnegative");
  Fan fan;
  fan.dim = 2;
  fan.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(a)}, {Int(0), Int(-1)}};
  fan.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  ensure_valid(fan);
  return fan;
}

}  // namespace toric

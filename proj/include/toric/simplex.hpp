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

#ifndef TORIC_SIMPLEX_HPP_
#define TORIC_SIMPLEX_HPP_

#include <vector>

#include "toric/linalg.hpp"

namespace toric {

struct LpResult {
  bool bounded = false;
  Rational value;  // optimum when bounded
};

/// Maximizes objective . x over {x in R^n : <x, normal_i> >= -1 for all i},
/// x free, by exact rational simplex with Bland's rule (free variables are
/// split as differences of nonnegatives; the origin is always feasible, so no
/// phase 1 is needed).
LpResult maximize_with_pairing_bounds(const std::vector<LatticeVector>& normals, int n,
                                      const std::vector<Rational>& objective);

}  // namespace toric

#endif  // TORIC_SIMPLEX_HPP_

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

#ifndef TORIC_CLASSIFY_HPP_
#define TORIC_CLASSIFY_HPP_

#include <map>

#include "toric/polytope.hpp"

namespace toric {

// A lattice point of the polytope together with its combinatorial data: the
// active rays (pairing exactly -1), the rank of their span, a deterministic
// independent sub-family (greedy, smallest ray indices first) and the
// standard-basis completion to a basis of Q^n.
struct PointClass {
  LatticeVector point;
  std::vector<int> active;                 // ascending ray indices
  int rank = 0;
  std::vector<int> basis_idx;              // subset of active, |basis_idx| == rank
  std::vector<LatticeVector> complement;   // n - rank completion vectors
};

// The lattice points grouped by rank (the strata) and by active set (one
// group per face whose relative interior meets the lattice).
struct Stratification {
  int dim = 0;
  std::vector<std::vector<PointClass>> by_rank;  // index i: points lex sorted
  std::map<std::vector<int>, std::vector<LatticeVector>> face_groups;

  size_t total() const;
};

/// Classifies one lattice point; throws if some pairing is below -1.
PointClass classify_point(const Fan& fan, const LatticeVector& point);

/// Classifies every point of the set. Points sharing a face interior are
/// exactly the points sharing an active set.
Stratification stratify(const Fan& fan, const LatticePointSet& pts);

/// Full polytope pipeline: halfspaces, certified box, enumeration, strata.
Stratification stratify_fan(const Fan& fan);

/// Strata 0..k concatenated in canonical order (rank, then point lex).
std::vector<PointClass> s_k(const Stratification& strat, int k);

}  // namespace toric

#endif  // TORIC_CLASSIFY_HPP_

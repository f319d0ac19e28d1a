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

#ifndef TORIC_PVF_HPP_
#define TORIC_PVF_HPP_

#include "toric/classify.hpp"
#include "toric/multivector.hpp"

namespace toric {

// Basis of one weight space of holomorphic k-vector fields. The weight is
// recorded as the lattice point I; the acting torus character is -I. Each
// generator x stands for the field chi^I . rho(x); all generators have
// integer coordinates in wedge^k Z^n.
struct WeightSpaceBasis {
  LatticeVector weight;
  int grade = 0;   // k
  int rank = 0;    // i, the rank of the point's active rays
  long long dim = 0;  // C(n-i, k-i), zero when i > k
  std::vector<Multivector> generators;
};

// dim H^0(X, wedge^k T_X) for k = 0..n, with the per-stratum terms
// binom(n-i, k-i) * #S(i) that sum to each entry.
struct DimensionTable {
  struct Term {
    int stratum = 0;           // i
    long long points = 0;      // #S(i)
    long long binom = 0;       // C(n-i, k-i)
    long long product = 0;
  };
  int dim = 0;
  std::vector<long long> dims;               // index k
  std::vector<std::vector<Term>> breakdown;  // index k

  bool operator==(const DimensionTable&) const;
};

/// Basis of V_I^k for one classified point: empty when i > k, all standard
/// monomials when i = 0, otherwise the wedge of the point's ray basis with
/// every (k-i)-subset of its completion vectors (lexicographic subset order).
WeightSpaceBasis weight_space(const Fan& fan, const PointClass& pc, int k);

/// One entry of the dimension formula: sum over i <= k of C(n-i,k-i)*#S(i).
long long dims_entry_by_face_formula(const Stratification& strat, int k);

DimensionTable dims_by_face_formula(const Stratification& strat);

/// One WeightSpaceBasis per point of S_k, in canonical order. The sum of the
/// dims equals dims_entry_by_face_formula(strat, k).
std::vector<WeightSpaceBasis> decomposition(const Fan& fan, const Stratification& strat, int k);
std::vector<WeightSpaceBasis> decomposition(const Fan& fan, int k);

}  // namespace toric

#endif  // TORIC_PVF_HPP_

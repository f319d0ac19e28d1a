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

#ifndef TORIC_LINALG_HPP_
#define TORIC_LINALG_HPP_

#include <vector>

#include "toric/rational.hpp"

namespace toric {

// A point of the lattice N (ray generators) or of the dual lattice M
// (weights); which side is meant is clear from context.
using LatticeVector = std::vector<Int>;
using IntMatrix = std::vector<LatticeVector>;  // row major

// Ambient dimensions above this are refused outright; the basis of
// wedge^k Q^n has C(n,k) elements and the implementation is meant for desk
// scale (n <= 12 stays comfortable).
inline constexpr int kMaxAmbientDim = 16;

Int dot(const LatticeVector& a, const LatticeVector& b);

LatticeVector stdbasis_vector(int n, int j);

/// v divided by the gcd of its coordinates; throws on the zero vector.
LatticeVector primitive(const LatticeVector& v);

/// Rank over Q via fraction-free (Bareiss) elimination. Rows must have equal
/// length; an empty row list has rank 0.
int rank(const IntMatrix& rows);

/// Determinant of a square matrix, fraction-free.
Int det(const IntMatrix& square);

/// Fraction-free row echelon form; returns only the nonzero rows. The row
/// span over Q is preserved.
IntMatrix row_reduce(IntMatrix rows);

/// Completes a linearly independent family to a basis of Q^n by greedily
/// appending standard basis vectors e_0, e_1, ... whenever the rank grows;
/// returns the appended vectors only. Throws if the input is dependent.
std::vector<LatticeVector> extend_to_basis(const std::vector<LatticeVector>& independent, int n);

/// Exact inverse of an integer matrix with det = +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

IntMatrix transpose(const IntMatrix& m);
LatticeVector mat_vec(const IntMatrix& m, const LatticeVector& v);

}  // namespace toric

#endif  // TORIC_LINALG_HPP_

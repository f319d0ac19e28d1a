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

#ifndef TORIC_MULTIVECTOR_HPP_
#define TORIC_MULTIVECTOR_HPP_

#include <map>
#include <string>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

// Strictly increasing 0-based axis indices. std::vector's lexicographic
// comparison is exactly the canonical subset order used everywhere
// (serialization prints indices 1-based).
using IndexSubset = std::vector<int>;

/// Enumerates all k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSubset> subsets_lex(int n, int k);

// An element of wedge^k Q^n, stored sparsely on the basis monomials
// e_{s_1} ^ ... ^ e_{s_k}, s_1 < ... < s_k. Zero coefficients are never kept.
// Grade 0 is a single scalar (key = empty subset).
class Multivector {
 public:
  Multivector(int ambient_dim, int grade);

  static Multivector scalar(int ambient_dim, const Rational& c);
  static Multivector monomial(int ambient_dim, const IndexSubset& subset,
                              const Rational& c = Rational(1));
  static Multivector from_vector(const LatticeVector& v);

  int ambient_dim() const { return n_; }
  int grade() const { return k_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<IndexSubset, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(const IndexSubset& s) const;

  void add_term(const IndexSubset& subset, const Rational& c);
  Multivector& operator+=(const Multivector& other);
  Multivector scaled(const Rational& c) const;

  bool operator==(const Multivector& other) const;

  std::string to_string() const;  // e.g. "2 e(1,3) - e(2,3)"

 private:
  int n_;
  int k_;
  std::map<IndexSubset, Rational> coeffs_;
};

/// x ^ v for a vector v (rational coordinates). Grade grows by one; throws on
/// grade overflow (grade(x) must be < n).
Multivector wedge(const Multivector& x, const std::vector<Rational>& v);
Multivector wedge(const Multivector& x, const LatticeVector& v);

/// Wedge of a list of vectors, left to right, starting from the scalar 1.
Multivector wedge_all(int n, const std::vector<LatticeVector>& vs);

/// dim { x in wedge^k Q^n : x ^ v = 0 for every v in vectors }, computed as
/// C(n,k) minus the rank of the stacked wedge-map system. For k = n the
/// constraints land in wedge^{n+1} = 0 and the dimension is 1.
int kernel_dim_of_wedge_maps(int n, int k, const std::vector<LatticeVector>& vectors);

}  // namespace toric

#endif  // TORIC_MULTIVECTOR_HPP_

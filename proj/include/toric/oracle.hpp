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

#ifndef TORIC_ORACLE_HPP_
#define TORIC_ORACLE_HPP_

#include <string>

#include "toric/pvf.hpp"

namespace toric {

// One affine chart: the rays of a maximal cone and the dual basis rows
// pairing to the identity with them. Smoothness makes the dual basis
// integral; the chart coordinate z_t is the character of dual_basis[t].
struct ChartData {
  int cone_index = -1;
  std::vector<int> cone;
  std::vector<LatticeVector> rays;        // e_t(sigma)
  std::vector<LatticeVector> dual_basis;  // e_t*(sigma)
};

// chi^I . rho(x) written on one chart. For each axis subset S carrying a
// nonzero coefficient, the partial-derivative coefficient is a single Laurent
// monomial with the recorded exponents m + 1_S (m_t = <I, e_t(sigma)>); no
// full polynomial is ever materialized.
struct LaurentTerm {
  IndexSubset axes;
  Rational coeff;
  std::vector<Int> exponents;
};
struct LaurentField {
  int grade = 0;
  std::vector<LaurentTerm> terms;
};

ChartData chart_data(const Fan& fan, int cone_index);

/// m_t = <I, e_t(sigma)> for every chart axis.
std::vector<Int> chart_exponents(const ChartData& chart, const LatticeVector& weight);

/// Rewrites x in the chart's ray basis and attaches the monomial exponents.
LaurentField chart_expand(const LatticeVector& weight, const Multivector& x,
                          const ChartData& chart);

/// True iff every Laurent coefficient of chi^I . rho(x) on this chart is a
/// polynomial (every recorded exponent nonnegative).
bool is_holomorphic_on_chart(const LatticeVector& weight, const Multivector& x,
                             const ChartData& chart);

/// Kernel oracle: dim { x : x ^ e = 0 for every active ray e of the point }.
int weight_space_dim_by_kernel(const Fan& fan, const PointClass& pc, int k);

/// Chart oracle, defined for every integer weight: zero unless the weight
/// lies in every chart's admissible set (all chart exponents >= -1, at most k
/// of them equal to -1); otherwise the kernel of all stacked chart
/// constraints.
int weight_space_dim_by_charts(const Fan& fan, const LatticeVector& weight, int k);

struct CrosscheckFailure {
  LatticeVector point;
  std::string kind;
  std::string detail;
};

// Sweep of the margin-inflated bounding box: the face formula, the kernel
// oracle and the chart oracle must agree on every weight, every emitted
// generator must be holomorphic on every chart, and the chart oracle must
// vanish outside S_k.
struct CrosscheckReport {
  std::string fan_id;
  int k = 0;
  long long margin = 0;
  long long total_formula = 0;
  long long total_kernel = 0;
  long long total_charts = 0;
  std::vector<CrosscheckFailure> failures;

  bool pass() const {
    return failures.empty() && total_formula == total_kernel && total_kernel == total_charts;
  }
};

CrosscheckReport crosscheck(const Fan& fan, int k, const Int& margin,
                            const std::string& fan_id = "fan");

}  // namespace toric

#endif  // TORIC_ORACLE_HPP_

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

#include "toric/oracle.hpp"

#include <sstream>

namespace toric {

namespace {

std::string vec_str(const LatticeVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace

ChartData chart_data(const Fan& fan, int cone_index) {
  if (cone_index < 0 || cone_index >= static_cast<int>(fan.max_cones.size()))
    throw std::invalid_argument("cone index out of range");
  ChartData chart;
  chart.cone_index = cone_index;
  chart.cone = fan.max_cones[cone_index];
  for (int idx : chart.cone) chart.rays.push_back(fan.rays[idx]);
  // rows D with D . R^T = id, i.e. <D_s, ray_t> = delta_st; integral because
  // the ray matrix is unimodular on a smooth fan
  try {
    chart.dual_basis = inverse_unimodular(transpose(chart.rays));
  } catch (const std::invalid_argument&) {
    throw std::logic_error("chart_data: cone ray matrix is not unimodular");
  }
  return chart;
}

std::vector<Int> chart_exponents(const ChartData& chart, const LatticeVector& weight) {
  std::vector<Int> m;
  m.reserve(chart.rays.size());
  for (const auto& ray : chart.rays) m.push_back(dot(weight, ray));
  return m;
}

LaurentField chart_expand(const LatticeVector& weight, const Multivector& x,
                          const ChartData& chart) {
  const int n = static_cast<int>(chart.rays.size());
  if (x.ambient_dim() != n) throw std::invalid_argument("chart_expand: dimension mismatch");
  const std::vector<Int> m = chart_exponents(chart, weight);

  // coordinates of the standard basis vector e_j in the ray basis = column j
  // of the dual matrix
  std::vector<LatticeVector> std_in_rays(n, LatticeVector(n));
  for (int t = 0; t < n; ++t)
    for (int j = 0; j < n; ++j) std_in_rays[j][t] = chart.dual_basis[t][j];

  Multivector rewritten(n, x.grade());
  for (const auto& [subset, c] : x.coefficients()) {
    Multivector mono = Multivector::scalar(n, c);
    for (int axis : subset) mono = wedge(mono, std_in_rays[axis]);
    rewritten += mono;
  }

  LaurentField field;
  field.grade = x.grade();
  for (const auto& [subset, c] : rewritten.coefficients()) {
    LaurentTerm term;
    term.axes = subset;
    term.coeff = c;
    term.exponents = m;
    for (int t : subset) term.exponents[t] += 1;
    field.terms.push_back(std::move(term));
  }
  return field;
}

bool is_holomorphic_on_chart(const LatticeVector& weight, const Multivector& x,
                             const ChartData& chart) {
  for (const auto& term : chart_expand(weight, x, chart).terms)
    for (const auto& e : term.exponents)
      if (e < 0) return false;
  return true;
}

int weight_space_dim_by_kernel(const Fan& fan, const PointClass& pc, int k) {
  std::vector<LatticeVector> active_rays;
  for (int t : pc.active) active_rays.push_back(fan.rays[t]);
  return kernel_dim_of_wedge_maps(fan.dim, k, active_rays);
}

int weight_space_dim_by_charts(const Fan& fan, const LatticeVector& weight, int k) {
  if (k < 0 || k > fan.dim) throw std::invalid_argument("k out of range");
  std::vector<LatticeVector> constraints;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    ChartData chart = chart_data(fan, static_cast<int>(c));
    int tight = 0;
    const std::vector<Int> m = chart_exponents(chart, weight);
    for (int t = 0; t < fan.dim; ++t) {
      if (m[t] < -1) return 0;  // weight not admissible on this chart
      if (m[t] == -1) {
        ++tight;
        constraints.push_back(chart.rays[t]);
      }
    }
    if (tight > k) return 0;
  }
  return kernel_dim_of_wedge_maps(fan.dim, k, constraints);
}

CrosscheckReport crosscheck(const Fan& fan, int k, const Int& margin,
                            const std::string& fan_id) {
  ensure_valid(fan);
  if (margin < 1) throw std::invalid_argument("margin must be at least 1");
  CrosscheckReport report;
  report.fan_id = fan_id;
  report.k = k;
  report.margin = to_int64(margin);

  HalfspaceSystem hs = build_halfspaces(fan);
  BoundingBox box = bounding_box(hs);
  BoundingBox shell = inflate(box, margin);

  std::vector<ChartData> charts;
  for (size_t c = 0; c < fan.max_cones.size(); ++c)
    charts.push_back(chart_data(fan, static_cast<int>(c)));

  for_each_box_point(shell, [&](const LatticeVector& point) {
    const int chart_dim = weight_space_dim_by_charts(fan, point, k);
    report.total_charts += chart_dim;
    if (!hs.contains(point)) {
      if (chart_dim != 0)
        report.failures.push_back({point, "vanishing",
                                   "chart oracle gives " + std::to_string(chart_dim) +
                                       " outside the polytope"});
      return;
    }
    PointClass pc = classify_point(fan, point);
    const long long formula_dim =
        pc.rank > k ? 0 : binomial64(fan.dim - pc.rank, k - pc.rank);
    const int kernel_dim = weight_space_dim_by_kernel(fan, pc, k);
    report.total_formula += formula_dim;
    report.total_kernel += kernel_dim;
    if (formula_dim != kernel_dim || kernel_dim != chart_dim) {
      report.failures.push_back(
          {point, "dimension",
           "formula " + std::to_string(formula_dim) + ", kernel " + std::to_string(kernel_dim) +
               ", charts " + std::to_string(chart_dim)});
      return;
    }
    if (pc.rank <= k) {
      WeightSpaceBasis ws = weight_space(fan, pc, k);
      for (const auto& g : ws.generators)
        for (const auto& chart : charts)
          if (!is_holomorphic_on_chart(point, g, chart))
            report.failures.push_back(
                {point, "holomorphicity",
                 "generator " + g.to_string() + " fails on chart of cone " +
                     std::to_string(chart.cone_index) + " at weight " + vec_str(point)});
    }
  });
  return report;
}

}  // namespace toric

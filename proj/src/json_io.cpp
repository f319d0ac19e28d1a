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

#include "toric/json_io.hpp"

namespace toric {

namespace {

ojson rational_value(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return ojson(static_cast<long long>(q.get_num().get_si()));
  return ojson(q.get_str());
}

std::string subset_key(const IndexSubset& s) {
  std::string key;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(s[i] + 1);
  }
  return key;
}

}  // namespace

ojson to_json(const ValidationReport& report) {
  ojson doc;
  doc["smooth"] = report.smooth;
  doc["complete"] = report.complete;
  doc["diagnostics"] = ojson::array();
  for (const auto& d : report.diagnostics)
    doc["diagnostics"].push_back({{"cone", d.cone}, {"reason", d.reason}});
  return doc;
}

ojson to_json(const LatticeVector& v) {
  ojson arr = ojson::array();
  for (const auto& c : v) arr.push_back(to_int64(c));
  return arr;
}

ojson to_json(const Multivector& x) {
  ojson doc = ojson::object();
  for (const auto& [s, c] : x.coefficients()) doc[subset_key(s)] = rational_value(c);
  return doc;
}

ojson to_json(const DimensionTable& table) {
  ojson arr = ojson::array();
  for (long long d : table.dims) arr.push_back(d);
  return arr;
}

ojson dims_document(const Stratification& strat, const DimensionTable& table) {
  ojson doc;
  doc["fan_dim"] = table.dim;
  doc["num_lattice_points"] = static_cast<long long>(strat.total());
  doc["dims"] = to_json(table);
  doc["breakdown"] = ojson::array();
  for (int k = 0; k <= table.dim; ++k) {
    ojson entry;
    entry["k"] = k;
    entry["total"] = table.dims[k];
    entry["terms"] = ojson::array();
    for (const auto& t : table.breakdown[k])
      entry["terms"].push_back({{"i", t.stratum},
                                {"points", t.points},
                                {"binom", t.binom},
                                {"term", t.product}});
    doc["breakdown"].push_back(std::move(entry));
  }
  std::map<std::vector<int>, int> face_rank;
  for (int i = 0; i <= strat.dim; ++i)
    for (const auto& pc : strat.by_rank[i]) face_rank[pc.active] = i;
  doc["faces"] = ojson::array();
  for (const auto& [active, points] : strat.face_groups) {
    ojson face;
    face["active"] = active;
    face["rank"] = face_rank.at(active);
    face["interior_points"] = static_cast<long long>(points.size());
    doc["faces"].push_back(std::move(face));
  }
  return doc;
}

ojson decompose_document(const Fan& fan, const Stratification& strat, int k) {
  DimensionTable table = dims_by_face_formula(strat);
  ojson doc;
  doc["fan_dim"] = fan.dim;
  doc["k"] = k;
  doc["character_note"] = "weights are listed as I; the acting torus character is -I";
  doc["dim_table"] = to_json(table);
  doc["weights"] = ojson::array();
  for (const auto& ws : decomposition(fan, strat, k)) {
    ojson entry;
    entry["I"] = to_json(ws.weight);
    entry["rank"] = ws.rank;
    entry["dim"] = ws.dim;
    entry["generators"] = ojson::array();
    for (const auto& g : ws.generators) entry["generators"].push_back(to_json(g));
    doc["weights"].push_back(std::move(entry));
  }
  return doc;
}

ojson to_json(const CrosscheckReport& report) {
  ojson doc;
  doc["fan_id"] = report.fan_id;
  doc["k"] = report.k;
  doc["margin"] = report.margin;
  doc["totals"] = {{"formula", report.total_formula},
                   {"kernel", report.total_kernel},
                   {"charts", report.total_charts}};
  doc["failures"] = ojson::array();
  for (const auto& f : report.failures)
    doc["failures"].push_back(
        {{"I", to_json(f.point)}, {"kind", f.kind}, {"detail", f.detail}});
  doc["pass"] = report.pass();
  return doc;
}

}  // namespace toric

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

#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace toric {

namespace {

std::vector<int> sorted_cone(const std::vector<int>& cone) {
  std::vector<int> s = cone;
  std::sort(s.begin(), s.end());
  return s;
}

std::string cone_str(const std::vector<int>& cone) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < cone.size(); ++i) os << (i ? "," : "") << cone[i];
  os << "}";
  return os.str();
}

}  // namespace

void check_structure(const Fan& fan) {
  if (fan.dim < 1) throw std::invalid_argument("fan dimension must be at least 1");
  if (fan.dim > kMaxAmbientDim)
    throw std::invalid_argument("ambient dimension above " + std::to_string(kMaxAmbientDim) +
                                " not supported");
  if (fan.rays.empty()) throw std::invalid_argument("fan has no rays");
  if (fan.max_cones.empty()) throw std::invalid_argument("fan has no maximal cones");
  std::set<LatticeVector> seen;
  for (size_t t = 0; t < fan.rays.size(); ++t) {
    const auto& ray = fan.rays[t];
    if (static_cast<int>(ray.size()) != fan.dim)
      throw std::invalid_argument("ray " + std::to_string(t) + " has wrong length");
    if (primitive(ray) != ray)  // throws "zero ray" on the zero vector
      throw std::invalid_argument("non-primitive ray at index " + std::to_string(t));
    if (!seen.insert(ray).second)
      throw std::invalid_argument("duplicate ray at index " + std::to_string(t));
  }
  std::set<std::vector<int>> cones_seen;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    if (static_cast<int>(cone.size()) != fan.dim)
      throw std::invalid_argument("maximal cone " + std::to_string(c) + " must have exactly " +
                                  std::to_string(fan.dim) + " rays");
    for (int idx : cone)
      if (idx < 0 || idx >= static_cast<int>(fan.rays.size()))
        throw std::invalid_argument("cone " + std::to_string(c) + " has ray index out of range");
    auto s = sorted_cone(cone);
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("cone " + std::to_string(c) + " has repeated ray indices");
    if (!cones_seen.insert(s).second)
      throw std::invalid_argument("duplicate maximal cone " + cone_str(cone));
  }
}

void validate_smooth(const Fan& fan, ValidationReport& report) {
  report.smooth = true;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    IntMatrix m;
    for (int idx : fan.max_cones[c]) m.push_back(fan.rays[idx]);
    Int d = det(m);
    if (d != 1 && d != -1) {
      report.smooth = false;
      report.diagnostics.push_back(
          {static_cast<int>(c), "cone " + cone_str(fan.max_cones[c]) +
                                    " has ray determinant " + d.get_str() +
                                    ", not a lattice basis"});
    }
  }
}

void validate_complete(const Fan& fan, ValidationReport& report) {
  report.complete = true;
  const int n = fan.dim;

  if (n == 1) {
    std::set<Int> rayset;
    for (const auto& r : fan.rays) rayset.insert(r[0]);
    std::set<std::vector<int>> cones;
    for (const auto& c : fan.max_cones) cones.insert(c);
    if (rayset != std::set<Int>{Int(-1), Int(1)} ||
        cones != std::set<std::vector<int>>{{0}, {1}}) {
      report.complete = false;
      report.diagnostics.push_back({-1, "a complete 1-dimensional fan has exactly the rays +1 and -1"});
    }
    return;
  }

  std::vector<bool> used(fan.rays.size(), false);
  for (const auto& cone : fan.max_cones)
    for (int idx : cone) used[idx] = true;
  for (size_t t = 0; t < used.size(); ++t)
    if (!used[t]) {
      report.complete = false;
      report.diagnostics.push_back({-1, "ray " + std::to_string(t) + " lies in no maximal cone"});
    }

  // Each ridge (cone facet) must be shared by exactly two maximal cones and
  // the resulting adjacency graph must be connected.
  std::map<std::vector<int>, std::vector<int>> ridge_owners;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto s = sorted_cone(fan.max_cones[c]);
    for (int drop = 0; drop < n; ++drop) {
      std::vector<int> ridge;
      for (int i = 0; i < n; ++i)
        if (i != drop) ridge.push_back(s[i]);
      ridge_owners[ridge].push_back(static_cast<int>(c));
    }
  }
  std::vector<std::vector<int>> adjacency(fan.max_cones.size());
  for (const auto& [ridge, owners] : ridge_owners) {
    if (owners.size() != 2) {
      report.complete = false;
      report.diagnostics.push_back(
          {owners.front(), "ridge " + cone_str(ridge) + " lies in " +
                               std::to_string(owners.size()) +
                               " maximal cones, expected 2"});
      continue;
    }
    adjacency[owners[0]].push_back(owners[1]);
    adjacency[owners[1]].push_back(owners[0]);
  }
  // dual-graph connectivity
  std::vector<bool> visited(fan.max_cones.size(), false);
  std::vector<int> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int d : adjacency[c])
      if (!visited[d]) {
        visited[d] = true;
        stack.push_back(d);
      }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end()) {
    report.complete = false;
    report.diagnostics.push_back({-1, "dual graph of maximal cones is not connected"});
  }
}

ValidationReport validate(const Fan& fan) {
  check_structure(fan);
  ValidationReport report;
  validate_smooth(fan, report);
  validate_complete(fan, report);
  return report;
}

void ensure_valid(const Fan& fan) {
  ValidationReport report = validate(fan);
  if (!report.ok()) {
    std::string msg = "fan is not smooth and complete:";
    for (const auto& d : report.diagnostics) msg += " " + d.reason + ";";
    throw std::invalid_argument(msg);
  }
}

namespace {

using json = nlohmann::ordered_json;

Int json_to_int(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string("malformed fan document: ") + what +
                                " must be an integer");
  return Int(static_cast<long>(v.get<long long>()));
}

}  // namespace

Fan parse_fan(const std::string& text, bool normalize) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed fan document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("rays") ||
      !doc.contains("max_cones"))
    throw std::invalid_argument("malformed fan document: need fields dim, rays, max_cones");

  Fan fan;
  fan.dim = static_cast<int>(to_int64(json_to_int(doc["dim"], "dim")));
  if (doc.contains("normalize")) {
    if (!doc["normalize"].is_boolean())
      throw std::invalid_argument("malformed fan document: normalize must be a boolean");
    normalize = normalize || doc["normalize"].get<bool>();
  }
  if (!doc["rays"].is_array() || !doc["max_cones"].is_array())
    throw std::invalid_argument("malformed fan document: rays and max_cones must be arrays");

  for (const auto& jray : doc["rays"]) {
    if (!jray.is_array())
      throw std::invalid_argument("malformed fan document: each ray must be an array");
    LatticeVector ray;
    for (const auto& c : jray) ray.push_back(json_to_int(c, "ray coordinate"));
    if (static_cast<int>(ray.size()) != fan.dim)
      throw std::invalid_argument("ray has " + std::to_string(ray.size()) +
                                  " coordinates, fan dimension is " + std::to_string(fan.dim));
    LatticeVector prim = primitive(ray);  // throws "zero ray"
    if (prim != ray && !normalize)
      throw std::invalid_argument("non-primitive ray (pass normalize to divide by the gcd)");
    fan.rays.push_back(std::move(prim));
  }
  for (const auto& jcone : doc["max_cones"]) {
    if (!jcone.is_array())
      throw std::invalid_argument("malformed fan document: each cone must be an array");
    std::vector<int> cone;
    for (const auto& c : jcone)
      cone.push_back(static_cast<int>(to_int64(json_to_int(c, "cone index"))));
    fan.max_cones.push_back(std::move(cone));
  }
  check_structure(fan);
  return fan;
}

std::string serialize_fan(const Fan& fan) {
  json doc;
  doc["dim"] = fan.dim;
  doc["rays"] = json::array();
  for (const auto& ray : fan.rays) {
    json jray = json::array();
    for (const auto& c : ray) jray.push_back(to_int64(c));
    doc["rays"].push_back(std::move(jray));
  }
  doc["max_cones"] = fan.max_cones;
  return doc.dump(2) + "\n";
}

}  // namespace toric

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

#ifndef TORIC_FAN_HPP_
#define TORIC_FAN_HPP_

#include <string>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

// A fan in R^n given by its primitive ray generators and its maximal cones
// (n-element index sets into rays, kept in input order; lower-dimensional
// cones are implicit). Ray order is the canonical tie-breaking order for the
// active sets downstream.
struct Fan {
  int dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<int>> max_cones;

  bool operator==(const Fan&) const = default;
};

struct Diagnostic {
  int cone = -1;  // -1 for fan-level findings
  std::string reason;
};

struct ValidationReport {
  bool smooth = false;
  bool complete = false;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return smooth && complete; }
};

/// Structural invariants: dimension range, ray lengths, primitivity,
/// distinctness, cone sizes and index ranges. Throws std::invalid_argument.
void check_structure(const Fan& fan);

/// All maximal-cone ray matrices must have determinant +-1.
void validate_smooth(const Fan& fan, ValidationReport& report);

/// Ridge pairing + connected dual graph (for n = 1: rays are exactly +1, -1).
/// Purely combinatorial given simpliciality; failures land in diagnostics.
void validate_complete(const Fan& fan, ValidationReport& report);

/// check_structure + both validators.
ValidationReport validate(const Fan& fan);

/// Throws std::invalid_argument unless the fan is structurally sound, smooth
/// and complete. Downstream entry points call this.
void ensure_valid(const Fan& fan);

/// Parses the JSON fan document {dim, rays, max_cones, normalize?}.
/// Non-primitive rays are an error unless the in-file flag or the argument
/// asks for normalization. Throws std::invalid_argument on malformed input.
Fan parse_fan(const std::string& text, bool normalize = false);

/// Canonical JSON document; parse_fan(serialize_fan(f)) == f.
std::string serialize_fan(const Fan& fan);

}  // namespace toric

#endif  // TORIC_FAN_HPP_

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

#ifndef TORIC_JSON_IO_HPP_
#define TORIC_JSON_IO_HPP_

#include <json.hpp>

#include "toric/oracle.hpp"

// JSON documents for the CLI and golden-file tests. All objects use insertion
// order (nlohmann::ordered_json) and every collection is emitted in its
// canonical order, so output is byte-stable across runs.
namespace toric {

using ojson = nlohmann::ordered_json;

ojson to_json(const ValidationReport& report);

/// Lattice vector as a plain array.
ojson to_json(const LatticeVector& v);

/// Multivector as {"subset": coefficient} with 1-based comma-joined subset
/// keys in lexicographic order; the empty subset (grade 0) is the key "".
ojson to_json(const Multivector& x);

ojson to_json(const DimensionTable& table);

/// Full dims document: dim table, per-stratum breakdown, face refinement.
ojson dims_document(const Stratification& strat, const DimensionTable& table);

/// Decomposition document for one k: {dim_table, weights: [...]}.
ojson decompose_document(const Fan& fan, const Stratification& strat, int k);

ojson to_json(const CrosscheckReport& report);

}  // namespace toric

#endif  // TORIC_JSON_IO_HPP_

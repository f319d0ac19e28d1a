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

#ifndef TORIC_GENERATORS_HPP_
#define TORIC_GENERATORS_HPP_

#include "toric/fan.hpp"

namespace toric {

/// Fan of P^n: rays e_1..e_n and -(e_1+...+e_n), maximal cones all n-subsets
/// of the n+1 rays.
Fan projective_space(int n);

/// Product fan of P^{d_1} x ... x P^{d_m}: block-embedded factor rays,
/// maximal cones the products of factor cones.
Fan product_projective(const std::vector<int>& dims);

/// The a-th Hirzebruch surface: rays (1,0),(0,1),(-1,a),(0,-1), cones
/// {0,1},{1,2},{2,3},{3,0}.
Fan hirzebruch(long a);

}  // namespace toric

#endif  // TORIC_GENERATORS_HPP_

// Copyright 2026 The llkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LLKP_NUMERIC_HPP_
#define LLKP_NUMERIC_HPP_

#include <span>
#include <vector>

namespace llkp {

// Single relative tolerance used for every boundary comparison in the library
// (interior test, ratio ties, tightness checks).
inline constexpr double kDefaultEps = 1e-12;

// Order-independent compensated summation: the result is the same double for
// every permutation of `values` (the values are sorted before a Neumaier
// pass). Every sum that feeds a branch decision or a published number goes
// through here; this is what makes the solvers exactly permutation
// equivariant. Inputs must be finite.
double stable_sum(std::vector<double> values);
double stable_sum(std::span<const double> values);

}  // namespace llkp

#endif  // LLKP_NUMERIC_HPP_

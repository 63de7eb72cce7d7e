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

#include "llkp/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace llkp {

double stable_sum(std::vector<double> values) {
  // Sorting first makes the accumulation order a function of the value
  // multiset alone; the Neumaier pass keeps the compensation exact even when
  // a summand is larger than the running total.
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

double stable_sum(std::span<const double> values) {
  return stable_sum(std::vector<double>(values.begin(), values.end()));
}

}  // namespace llkp

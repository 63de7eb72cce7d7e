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

#include "llkp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "llkp/errors.hpp"
#include "rng.hpp"

namespace llkp {

double lambda_excess(const Instance& inst, double lambda) {
  if (!(lambda > 0.0)) {
    throw NonPositiveLambda("lambda must be strictly positive");
  }
  const auto alpha = inst.weights();
  const auto p = inst.prices();
  // Plain left-to-right accumulation, deliberately: rounding is monotone in
  // each operand, so the computed function stays exactly nonincreasing in
  // lambda, which the bisection bracket relies on. A reordering compensated
  // sum would trade that away for accuracy nobody needs here.
  double sum = 0.0;
  for (std::size_t j = 0; j < inst.size(); ++j) {
    const double stationary = alpha[j] / (lambda * p[j]);
    sum += p[j] * (stationary < 1.0 ? stationary : 1.0);
  }
  return sum - inst.capacity();
}

double waterfill_multiplier(const Instance& inst, const BisectionConfig& cfg) {
  const double m = inst.capacity();
  if (!(inst.price_sum() > m)) {
    throw BracketFailure(
        "trivial instance (price sum <= capacity): the excess has no "
        "positive root");
  }
  const auto alpha = inst.weights();
  const auto p = inst.prices();
  double lo = alpha[0] / p[0];
  for (std::size_t j = 1; j < inst.size(); ++j) {
    lo = std::min(lo, alpha[j] / p[j]);
  }
  double hi = 1.0 / m;
  if (hi < lo) {
    hi = lo;
  }

  const double f_lo = lambda_excess(inst, lo);
  double f_hi = lambda_excess(inst, hi);
  if (std::isnan(f_lo) || std::isnan(f_hi) || !(f_lo > 0.0)) {
    throw BracketFailure("no sign change over [min ratio, 1/capacity]");
  }
  if (f_hi > 0.0) {
    // The true multiplier is at most weight_sum/m, which can exceed 1/m by
    // the rounding of the normalized weight sum. One nudge covers that;
    // anything further is corruption.
    hi *= 1.0 + 1e-9;
    f_hi = lambda_excess(inst, hi);
    if (!(f_hi <= 0.0)) {
      throw BracketFailure("excess stays positive past 1/capacity");
    }
  }

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = lambda_excess(inst, mid);
    if (hi - lo <= cfg.lambda_tol * hi && std::abs(f_mid) <= cfg.excess_tol * m) {
      return mid;
    }
    if (f_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw MaxIterExceeded("no convergence after " +
                        std::to_string(cfg.max_iter) + " bisection steps");
}

Solution solve_bisection(const Instance& inst, const BisectionConfig& cfg) {
  const std::size_t n = inst.size();
  Solution sol;
  sol.x.assign(n, 1.0);
  if (inst.price_sum() <= inst.capacity()) {
    sol.trace.terminal = Terminal::AllOnes;
    sol.tight = inst.price_sum() >= inst.capacity() * (1.0 - kDefaultEps);
    sol.objective = objective(inst, sol.x);
    return sol;
  }
  const double lambda = waterfill_multiplier(inst, cfg);
  const auto alpha = inst.weights();
  const auto p = inst.prices();
  for (std::size_t j = 0; j < n; ++j) {
    const double stationary = alpha[j] / (lambda * p[j]);
    sol.x[j] = stationary < 1.0 ? stationary : 1.0;
  }
  sol.trace.terminal = Terminal::Interior;
  sol.tight = true;
  sol.objective = objective(inst, sol.x);
  return sol;
}

std::vector<double> random_feasible(const Instance& inst, std::uint64_t seed) {
  const std::size_t n = inst.size();
  const auto p = inst.prices();
  const double m = inst.capacity();
  detail::SplitMix64 rng(seed);

  std::vector<double> u(n);
  std::vector<double> spend(n);
  for (std::size_t j = 0; j < n; ++j) {
    u[j] = rng.uniform01();
    spend[j] = p[j] * u[j];
  }
  const double total = stable_sum(spend);
  double scale = total > m ? m / total : 1.0;

  std::vector<double> z(n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (std::size_t j = 0; j < n; ++j) {
      z[j] = u[j] * scale;
      spend[j] = p[j] * z[j];
    }
    if (stable_sum(spend) <= m) {
      return z;
    }
    // The real-arithmetic scale can land a rounding error above the budget;
    // shave an ulp and retry.
    scale *= 1.0 - 0x1.0p-50;
  }
  return z;
}

}  // namespace llkp

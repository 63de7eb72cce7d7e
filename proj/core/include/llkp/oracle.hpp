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
//
// Independent ground truth for the solver module: water-filling by bisection
// on the Lagrange multiplier of the budget constraint, plus a seeded sampler
// of random feasible points for dominance tests. Deliberately shares no code
// path with the solvers it is used to check; robustness is the goal here,
// not speed.

#ifndef LLKP_ORACLE_HPP_
#define LLKP_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "llkp/model.hpp"

namespace llkp {

// Stopping rule for the bisection. Both criteria must hold before the search
// stops: the relative width bound keeps the multiplier (and with it every
// coordinate of x) pinned down even where the excess curve is flat, and the
// excess bound keeps the budget residual small even where the curve is
// steep. All fields must be positive.
struct BisectionConfig {
  double lambda_tol = 1e-13;  // stop when (hi - lo) <= lambda_tol * hi
  double excess_tol = 1e-12;  // ... and |excess(mid)| <= excess_tol * m
  int max_iter = 200;
};

// Budget excess of the water-filling point at multiplier lambda:
//
//     excess(lambda) = sum_j p_j * min(1, alpha_j / (lambda * p_j)) - m.
//
// Continuous and nonincreasing in lambda, piecewise smooth with breakpoints
// at lambda = alpha_j/p_j; the root is the optimal multiplier. The
// accumulation is a plain left-to-right sum: rounding is monotone, so the
// computed function is still exactly nonincreasing, which bisection relies
// on. Throws NonPositiveLambda unless lambda > 0.
double lambda_excess(const Instance& inst, double lambda);

// Root of lambda_excess by bisection on the bracket
// [min_j alpha_j/p_j, 1/m]: at the left end every variable caps at 1, so the
// excess is price_sum - m > 0 on a nontrivial instance; at the right end the
// uncapped sum is at most weight_sum/lambda = m, so the excess is <= 0 up to
// the last rounding (the right end is nudged up once if that rounding lands
// above zero). Requires price_sum > m. Throws BracketFailure when no valid
// bracket exists (trivial instance, or NaN corruption) and MaxIterExceeded
// when cfg.max_iter iterations pass without meeting both stopping criteria.
double waterfill_multiplier(const Instance& inst,
                            const BisectionConfig& cfg = {});

// Full oracle solve. Trivial instances (price_sum <= m) return the all-ones
// solution; otherwise x_j = min(1, alpha_j / (lambda * p_j)) at the bisected
// multiplier. The trace carries no rounds (the oracle has no combinatorial
// history); terminal is AllOnes or Interior accordingly. Errors as
// waterfill_multiplier.
Solution solve_bisection(const Instance& inst, const BisectionConfig& cfg = {});

// Deterministic-in-seed feasible point: samples u_j uniform in (0, 1], then
// scales z = u * min(1, m / sum_j p_j u_j). Every coordinate lands in (0, 1]
// and sum_j p_j z_j <= m holds for the stable recomputation of the sum (the
// scale is shaved by an ulp until it does). Used to test that solver outputs
// dominate arbitrary feasible points.
std::vector<double> random_feasible(const Instance& inst, std::uint64_t seed);

}  // namespace llkp

#endif  // LLKP_ORACLE_HPP_

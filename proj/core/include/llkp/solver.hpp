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
// Exact solvers for the log-linear continuous knapsack problem, in two
// equivalent formulations, plus construction and checking of the dual
// (KKT) optimality certificate.
//
// The optimum has a fix-and-renormalize structure: variables whose
// bang-per-buck ratio alpha_j/p_j is large enough sit at their upper bound 1,
// and the rest take water-filling values proportional to alpha_j/p_j. Which
// variables are bound is decided greedily: as long as the best remaining
// ratio would overshoot 1 under the interior formula, the whole argmax tie
// group is pinned to 1, capacity is reduced by its price, and the test
// repeats on the residual problem.

#ifndef LLKP_SOLVER_HPP_
#define LLKP_SOLVER_HPP_

#include <span>
#include <vector>

#include "llkp/model.hpp"

namespace llkp {

// Lagrange multipliers certifying optimality: lambda for the budget
// constraint, mu_j for the bound x_j <= 1. At an optimum of a nontrivial
// instance lambda > 0, mu_j >= 0 with mu_j > 0 only where x_j = 1, and
// sum_j mu_j < 1 (the dual optimum m*lambda + sum mu equals 1).
struct DualCertificate {
  double lambda = 0.0;
  std::vector<double> mu;
};

// Reference solver: repeatedly fixes the argmax tie group of alpha_j/p_j to 1
// until the remaining variables pass the interior test, then assigns them
// their water-filling values. Worst case O(L^2) when every round fixes a
// single variable. Branches, in order of preference each round:
//   (a) price_sum <= m            -> all ones, Terminal::AllOnes
//   (b) max ratio passes r*m_res <= mass*(1+eps)
//                                 -> interior assignment, Terminal::Interior
//   (c) otherwise                 -> pin the whole argmax tie group, repeat
//   (d) one variable left and (b) failed
//                                 -> x_h = m_res/p_h,
//                                    Terminal::SingleVariableFormula
// (d) is defensive: when one variable is left the interior test always passes
// (the residual problem keeps mass > ratio-max * residual impossible), so (b)
// fires first. Two ratios are tied when |r_j - r_k| <= eps * max(r_j, r_k).
// Total on every validated instance; only propagates validation errors.
Solution solve_iterative(const Instance& inst, double eps = kDefaultEps);

// Fast equivalent: sorts indices by alpha_j/p_j descending once, then scans
// tie-group prefixes maintaining residual capacity and remaining weight mass,
// stopping at the first prefix whose next-best ratio passes the interior
// test. O(L log L). The branch predicates and assignment expressions are
// shared with solve_iterative, so the two return identical doubles, not
// merely close ones.
Solution solve_sorted(const Instance& inst, double eps = kDefaultEps);

// Builds the multiplier pair for a solver output on a nontrivial instance
// (price_sum > m). lambda comes from the most interior coordinate, lambda =
// alpha_j/(p_j x_j) for the smallest x_j < 1; when every coordinate sits at 1
// (possible only when m is within rounding of price_sum) it falls back to
// the terminal weight-mass over residual-capacity ratio, which reduces to
// 1/m when no rounds were taken. mu_j = max(0, alpha_j/x_j - lambda*p_j);
// the clamp keeps exact-tie coordinates from going negative by one ulp.
//
// Throws NoCertificateNeeded when price_sum <= m (the all-ones optimum is
// certified by feasibility alone) and InconsistentSolution when sol is not a
// plausible solver output for inst (wrong length, coordinates outside (0,1],
// or budget violation beyond tolerance).
DualCertificate dual_certificate(const Instance& inst, const Solution& sol,
                                 double eps = kDefaultEps);

// Measures the KKT conditions of (x, cert) on inst at tolerance tol:
// stationarity max_j |alpha_j/x_j - lambda*p_j - mu_j|, complementary
// slackness max_j |mu_j (1 - x_j)|, primal feasibility (sum p_j x_j <= m +
// tol*m, x_j <= 1 + tol, and tightness |sum p_j x_j - m| <= tol*m when
// price_sum > m), dual feasibility (lambda > 0, mu_j >= -tol), and the mass
// condition sum mu_j < 1. verdict is the conjunction with both residuals
// compared against tol. Throws DomainError unless every x_j > 0,
// LengthMismatch on size disagreements.
KktReport check_kkt(const Instance& inst, std::span<const double> x,
                    const DualCertificate& cert, double tol);

}  // namespace llkp

#endif  // LLKP_SOLVER_HPP_

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
// Problem and solution data types for the log-linear continuous knapsack
// problem:
//
//     maximize    sum_j alpha_j * ln(x_j)
//     subject to  sum_j p_j * x_j <= m,    0 <= x_j <= 1,
//
// with weights alpha in the strict interior of the simplex, prices p > 0 and
// capacity m > 0. The objective is strictly concave on the positive orthant,
// so the optimum exists and is unique; every optimal x_j is strictly
// positive, and when sum_j p_j > m the budget constraint binds with equality.

#ifndef LLKP_MODEL_HPP_
#define LLKP_MODEL_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "llkp/numeric.hpp"

namespace llkp {

// A validated problem instance. Construction goes through validate() (or the
// io module's parsers), which is where all input checking lives; once built,
// an Instance is immutable and safe to share across threads.
//
// Weights are normalized at intake: validate() divides each raw weight by the
// raw sum so that weights() sums to 1. This is a deliberate convenience (the
// optimizer is invariant under positive scaling of the weight vector, and the
// algorithm renormalizes internally anyway); callers who need the original
// scale must keep it themselves, the factor is not retained.
class Instance {
 public:
  // Normalized weights alpha; strictly positive, sums to 1.
  std::span<const double> weights() const noexcept { return weights_; }

  // Prices p; strictly positive.
  std::span<const double> prices() const noexcept { return prices_; }

  // Capacity m; strictly positive.
  double capacity() const noexcept { return capacity_; }

  // Number of variables L.
  std::size_t size() const noexcept { return weights_.size(); }

  // Cached stable_sum(weights()); equals 1 up to the final rounding.
  double weight_sum() const noexcept { return weight_sum_; }

  // Cached stable_sum(prices()). The problem is trivial iff price_sum() <=
  // capacity(), in which case the all-ones vector is feasible and optimal.
  double price_sum() const noexcept { return price_sum_; }

 private:
  Instance(std::vector<double> weights, std::vector<double> prices, double m);

  friend Instance validate(std::span<const double>, std::span<const double>,
                           double);
  friend Instance scale_instance(const Instance&, double);

  std::vector<double> weights_;
  std::vector<double> prices_;
  double capacity_;
  double weight_sum_;
  double price_sum_;
};

// How a solve run terminated.
//  - AllOnes: sum_j p_j <= m, every variable sits at its upper bound.
//  - Interior: the remaining variables were assigned their water-filling
//    values alpha_j * m_res / (mass * p_j) in one final step.
//  - SingleVariableFormula: one variable was left and assigned the residual
//    capacity directly, x_h = m_res / p_h. Kept for completeness; the
//    interior test is preferred when both endings apply, so this terminal is
//    not produced by the shipped solvers.
enum class Terminal { AllOnes, Interior, SingleVariableFormula };

// One fixing round: the tie group of best-ratio variables pinned to 1, and
// the state of the residual problem after pinning them.
struct TraceRound {
  std::vector<std::size_t> fixed_indices;  // 0-based, sorted ascending
  double residual_capacity;  // capacity left after paying for this group
  double weight_mass;        // original-weight mass of the remaining variables
};

// Full solve history. Invariants: fixed_indices are pairwise disjoint across
// rounds; residual_capacity strictly decreases and stays positive.
struct SolveTrace {
  std::vector<TraceRound> rounds;
  Terminal terminal = Terminal::Interior;
};

struct Solution {
  std::vector<double> x;    // unique optimum, 0 < x_j <= 1
  double objective = 0.0;   // sum_j alpha_j * ln(x_j) at x
  bool tight = false;       // budget constraint holds with equality
  SolveTrace trace;
};

// Outcome of a KKT check: measured residuals plus per-condition booleans.
// verdict is the conjunction of everything (residuals compared against the
// checker's tolerance). For this problem KKT is sufficient: the objective is
// strictly concave over a convex feasible set, so a passing report certifies
// the unique global optimum.
struct KktReport {
  double stationarity_residual = 0.0;  // max_j |alpha_j/x_j - lambda*p_j - mu_j|
  double comp_slack_residual = 0.0;    // max_j |mu_j * (1 - x_j)|
  bool primal_feasibility = false;     // budget, bounds, tightness when needed
  bool dual_feasibility = false;       // lambda > 0, mu_j >= 0
  bool mu_mass_ok = false;             // sum_j mu_j < 1
  bool verdict = false;
};

// Checks and normalizes raw input into an Instance.
//
// Throws EmptyInstance when the vectors are empty, NonFinite on any NaN or
// infinity (including a weight sum that overflows), NonPositiveWeight /
// NonPositivePrice / NonPositiveCapacity on violations of strict positivity,
// and LengthMismatch when the vectors disagree in length.
Instance validate(std::span<const double> raw_alpha,
                  std::span<const double> raw_p, double raw_m);

// Evaluates sum_j alpha_j * ln(x_j). Throws DomainError unless every x_j is
// strictly positive (NaN fails that test too), LengthMismatch on wrong size.
double objective(const Instance& inst, std::span<const double> x);

// Returns the instance with p <- t*p and m <- t*m, weights untouched. The
// feasible set and the optimum are invariant under this scaling. Throws
// NonPositiveScale unless t is finite and strictly positive.
Instance scale_instance(const Instance& inst, double t);

// Resource-allocation intake: y_j = p_j * x_j is the amount of resource given
// to activity j, and maximizing sum alpha_j ln(y_j) over sum y_j <= m with
// y_j <= caps_j is, after the substitution x_j = y_j / caps_j and dropping
// the constant sum alpha_j ln(caps_j), exactly the knapsack form above with
// p = caps. Solving the returned Instance and mapping back through
// allocation_of() recovers the allocation optimum up to that constant.
// Throws as validate.
Instance from_allocation(std::span<const double> alpha,
                         std::span<const double> caps, double m);

// Componentwise y_j = p_j * x_j. Throws LengthMismatch.
std::vector<double> allocation_of(const Instance& inst,
                                  std::span<const double> x);

}  // namespace llkp

#endif  // LLKP_MODEL_HPP_

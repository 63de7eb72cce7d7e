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

#include "llkp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "llkp/errors.hpp"

namespace llkp {
namespace {

// The two solvers must return identical doubles, so every branch predicate
// and assignment they share lives here as one expression.

// Interior test at the residual problem (residual capacity, remaining
// original-weight mass): the best remaining ratio r stays within its bound
// iff r * residual <= mass * (1 + eps). Checking the maximum ratio covers
// all remaining variables at once.
inline bool interior_reached(double rmax, double residual, double mass,
                             double eps) {
  return rmax * residual <= mass * (1.0 + eps);
}

// Ratios r_j and r_k are tied when |r_j - r_k| <= eps * max(r_j, r_k);
// membership in the argmax group is r_j >= cutoff.
inline double tie_cutoff(double rmax, double eps) {
  return rmax * (1.0 - eps);
}

// Water-filling value of a remaining variable, clamped at the bound: the
// interior test allows values up to 1 + eps, and a coordinate whose true
// value rounds past 1 belongs at 1.
inline double interior_value(double alpha_j, double residual, double mass,
                             double p_j) {
  const double v = alpha_j * residual / (mass * p_j);
  return v < 1.0 ? v : 1.0;
}

// Running sum/difference held as an unevaluated (hi, lo) pair. Two rounding
// effects make a plain running value unusable here: thousands of fixing
// rounds accumulate one rounding each, and a remaining mass many orders
// below the starting total inherits the total's own rounding as a large
// relative error (the remaining weight after fixing a dominant item is a
// catastrophic cancellation). Keeping the error term through every update
// makes value() correct to one rounding at any magnitude.
class ExactRunning {
 public:
  // Pair total of values, accumulated in ascending order. Materializing it
  // gives the same double as stable_sum over the same values.
  static ExactRunning sum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    ExactRunning acc(0.0);
    for (double v : values) {
      acc.add(v);
    }
    return acc;
  }

  explicit ExactRunning(double initial) : hi_(initial) {}

  void add(double v) {
    const double t = hi_ + v;
    if (std::abs(hi_) >= std::abs(v)) {
      lo_ += (hi_ - t) + v;
    } else {
      lo_ += (v - t) + hi_;
    }
    hi_ = t;
  }

  void subtract(double v) { add(-v); }

  double value() const { return hi_ + lo_; }

 private:
  double hi_;
  double lo_ = 0.0;
};

// Canonical update order shared by both solvers: groups are subtracted
// element by element in ascending value order, so the pair state is a
// function of the group's multiset alone.
void subtract_group(ExactRunning& acc, std::vector<double> group) {
  std::sort(group.begin(), group.end());
  for (double v : group) {
    acc.subtract(v);
  }
}

Solution all_ones(const Instance& inst, double eps) {
  Solution sol;
  sol.x.assign(inst.size(), 1.0);
  sol.trace.terminal = Terminal::AllOnes;
  sol.tight = inst.price_sum() >= inst.capacity() * (1.0 - eps);
  sol.objective = objective(inst, sol.x);
  return sol;
}

}  // namespace

Solution solve_iterative(const Instance& inst, double eps) {
  if (inst.price_sum() <= inst.capacity()) {
    return all_ones(inst, eps);
  }
  const auto alpha = inst.weights();
  const auto p = inst.prices();
  const std::size_t n = inst.size();

  std::vector<double> ratio(n);
  for (std::size_t j = 0; j < n; ++j) {
    ratio[j] = alpha[j] / p[j];
  }

  Solution sol;
  sol.x.assign(n, 1.0);
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), std::size_t{0});
  ExactRunning residual(inst.capacity());
  ExactRunning mass = ExactRunning::sum({alpha.begin(), alpha.end()});

  while (true) {
    const double res = residual.value();
    const double wm = mass.value();
    double rmax = 0.0;
    for (std::size_t j : active) {
      rmax = std::max(rmax, ratio[j]);
    }
    if (interior_reached(rmax, res, wm, eps)) {
      for (std::size_t j : active) {
        sol.x[j] = interior_value(alpha[j], res, wm, p[j]);
      }
      sol.trace.terminal = Terminal::Interior;
      break;
    }
    if (active.size() == 1) {
      sol.x[active.front()] = res / p[active.front()];
      sol.trace.terminal = Terminal::SingleVariableFormula;
      break;
    }

    const double cutoff = tie_cutoff(rmax, eps);
    TraceRound round;
    std::vector<std::size_t> keep;
    keep.reserve(active.size());
    std::vector<double> group_p;
    std::vector<double> group_alpha;
    for (std::size_t j : active) {
      if (ratio[j] >= cutoff) {
        sol.x[j] = 1.0;
        round.fixed_indices.push_back(j);
        group_p.push_back(p[j]);
        group_alpha.push_back(alpha[j]);
      } else {
        keep.push_back(j);
      }
    }
    subtract_group(residual, std::move(group_p));
    subtract_group(mass, std::move(group_alpha));
    round.residual_capacity = residual.value();
    round.weight_mass = mass.value();
    sol.trace.rounds.push_back(std::move(round));
    active = std::move(keep);
    if (active.empty()) {
      // Unreachable on valid instances: when the interior test fails the
      // argmax group is a proper subset of the active set.
      sol.trace.terminal = Terminal::Interior;
      break;
    }
  }

  sol.tight = true;
  sol.objective = objective(inst, sol.x);
  return sol;
}

Solution solve_sorted(const Instance& inst, double eps) {
  if (inst.price_sum() <= inst.capacity()) {
    return all_ones(inst, eps);
  }
  const auto alpha = inst.weights();
  const auto p = inst.prices();
  const std::size_t n = inst.size();

  std::vector<double> ratio(n);
  for (std::size_t j = 0; j < n; ++j) {
    ratio[j] = alpha[j] / p[j];
  }
  // The set of bound variables is a prefix of the ratio-descending order, so
  // one sort replaces the per-round argmax scans. Tie groups are contiguous
  // runs; the order inside a run does not matter because group sums are
  // order-independent.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&ratio](std::size_t a, std::size_t b) { return ratio[a] > ratio[b]; });

  Solution sol;
  sol.x.assign(n, 1.0);
  ExactRunning residual(inst.capacity());
  ExactRunning mass = ExactRunning::sum({alpha.begin(), alpha.end()});
  std::size_t pos = 0;

  while (true) {
    const double res = residual.value();
    const double wm = mass.value();
    const double rmax = ratio[order[pos]];
    if (interior_reached(rmax, res, wm, eps)) {
      for (std::size_t k = pos; k < n; ++k) {
        const std::size_t j = order[k];
        sol.x[j] = interior_value(alpha[j], res, wm, p[j]);
      }
      sol.trace.terminal = Terminal::Interior;
      break;
    }
    if (n - pos == 1) {
      sol.x[order[pos]] = res / p[order[pos]];
      sol.trace.terminal = Terminal::SingleVariableFormula;
      break;
    }

    const double cutoff = tie_cutoff(rmax, eps);
    TraceRound round;
    std::vector<double> group_p;
    std::vector<double> group_alpha;
    std::size_t k = pos;
    while (k < n && ratio[order[k]] >= cutoff) {
      const std::size_t j = order[k];
      sol.x[j] = 1.0;
      round.fixed_indices.push_back(j);
      group_p.push_back(p[j]);
      group_alpha.push_back(alpha[j]);
      ++k;
    }
    subtract_group(residual, std::move(group_p));
    subtract_group(mass, std::move(group_alpha));
    std::sort(round.fixed_indices.begin(), round.fixed_indices.end());
    round.residual_capacity = residual.value();
    round.weight_mass = mass.value();
    sol.trace.rounds.push_back(std::move(round));
    pos = k;
    if (pos == n) {
      // Unreachable, as in solve_iterative.
      sol.trace.terminal = Terminal::Interior;
      break;
    }
  }

  sol.tight = true;
  sol.objective = objective(inst, sol.x);
  return sol;
}

DualCertificate dual_certificate(const Instance& inst, const Solution& sol,
                                 double eps) {
  const std::size_t n = inst.size();
  const double m = inst.capacity();
  if (inst.price_sum() <= m) {
    throw NoCertificateNeeded(
        "price sum <= capacity: the all-ones optimum is certified by "
        "feasibility alone");
  }
  if (sol.x.size() != n) {
    throw InconsistentSolution("x has length " + std::to_string(sol.x.size()) +
                               " but the instance has " + std::to_string(n));
  }
  const auto alpha = inst.weights();
  const auto p = inst.prices();
  for (std::size_t j = 0; j < n; ++j) {
    if (!(sol.x[j] > 0.0) || sol.x[j] > 1.0 + eps) {
      throw InconsistentSolution("x[" + std::to_string(j) +
                                 "] lies outside (0, 1]");
    }
  }
  std::vector<double> spend(n);
  for (std::size_t j = 0; j < n; ++j) {
    spend[j] = p[j] * sol.x[j];
  }
  const double spent = stable_sum(std::move(spend));
  if (spent > m * (1.0 + eps)) {
    throw InconsistentSolution("primal infeasible: sum p_j x_j exceeds m");
  }

  // The multiplier is pinned by any strictly interior coordinate; the
  // smallest one is the best conditioned. Bound coordinates carry the
  // literal 1.0, so a strict compare is the right membership test.
  std::size_t h = n;
  double x_min = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.x[j] < x_min) {
      x_min = sol.x[j];
      h = j;
    }
  }
  double lambda;
  if (h < n) {
    lambda = alpha[h] / (p[h] * sol.x[h]);
  } else if (!sol.trace.rounds.empty()) {
    // Every coordinate sits at the bound (capacity within rounding of the
    // price sum). Summing the stationarity equations over the terminal
    // residual problem gives lambda = remaining mass / residual capacity.
    const TraceRound& last = sol.trace.rounds.back();
    lambda = last.weight_mass / last.residual_capacity;
  } else {
    lambda = inst.weight_sum() / m;
  }
  if (!std::isfinite(lambda) || !(lambda > 0.0)) {
    throw InconsistentSolution("no positive multiplier fits this solution");
  }

  DualCertificate cert;
  cert.lambda = lambda;
  cert.mu.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    // Clamped at zero: coordinates whose ratio ties the multiplier have an
    // analytic mu of exactly 0 and must not go negative by an ulp.
    cert.mu[j] = std::max(0.0, alpha[j] / sol.x[j] - lambda * p[j]);
  }
  return cert;
}

KktReport check_kkt(const Instance& inst, std::span<const double> x,
                    const DualCertificate& cert, double tol) {
  const std::size_t n = inst.size();
  if (x.size() != n) {
    throw LengthMismatch("x has length " + std::to_string(x.size()) +
                         " but the instance has " + std::to_string(n));
  }
  if (cert.mu.size() != n) {
    throw LengthMismatch("mu has length " + std::to_string(cert.mu.size()) +
                         " but the instance has " + std::to_string(n));
  }
  if (!(tol > 0.0)) {
    throw DomainError("tol must be strictly positive");
  }
  const auto alpha = inst.weights();
  const auto p = inst.prices();
  for (std::size_t j = 0; j < n; ++j) {
    if (!(x[j] > 0.0)) {
      throw DomainError("x[" + std::to_string(j) +
                        "] must be strictly positive");
    }
  }

  KktReport rep;
  double stationarity = 0.0;
  double comp_slack = 0.0;
  bool bounds_ok = true;
  bool mu_nonneg = true;
  std::vector<double> spend(n);
  for (std::size_t j = 0; j < n; ++j) {
    stationarity = std::max(
        stationarity,
        std::abs(alpha[j] / x[j] - cert.lambda * p[j] - cert.mu[j]));
    comp_slack = std::max(comp_slack, std::abs(cert.mu[j] * (1.0 - x[j])));
    bounds_ok = bounds_ok && x[j] <= 1.0 + tol;
    mu_nonneg = mu_nonneg && cert.mu[j] >= -tol;
    spend[j] = p[j] * x[j];
  }
  const double spent = stable_sum(std::move(spend));
  const double m = inst.capacity();

  rep.stationarity_residual = stationarity;
  rep.comp_slack_residual = comp_slack;
  const bool must_be_tight = inst.price_sum() > m;
  rep.primal_feasibility =
      bounds_ok && (must_be_tight ? std::abs(spent - m) <= tol * m
                                  : spent <= m + tol * m);
  rep.dual_feasibility = cert.lambda > 0.0 && mu_nonneg;
  rep.mu_mass_ok = stable_sum(std::span<const double>(cert.mu)) < 1.0;
  rep.verdict = rep.primal_feasibility && rep.dual_feasibility &&
                rep.mu_mass_ok && stationarity <= tol && comp_slack <= tol;
  return rep;
}

}  // namespace llkp

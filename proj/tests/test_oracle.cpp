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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <doctest.h>

#include "llkp/errors.hpp"
#include "llkp/model.hpp"
#include "llkp/numeric.hpp"
#include "llkp/oracle.hpp"
#include "llkp/solver.hpp"

#include "test_util.hpp"

using llkp::Instance;
using llkp_test::golden;
using llkp_test::max_dev;

TEST_CASE("excess of the golden instance at known multipliers") {
  const Instance inst = golden();

  // At the optimal multiplier the budget is exactly consumed.
  CHECK(std::abs(llkp::lambda_excess(inst, 1.0 / 6.0)) <= 1e-15 * 5.0);

  // At lambda = 0.1 items 1 and 2 cap at 1 and item 3 wants 10/9 of its
  // price: spend 1 + 2 + 3 = 6, excess exactly 1.
  CHECK(llkp::lambda_excess(inst, 0.1) == 1.0);

  // At lambda = 1 the spend collapses to sum alpha_j / lambda = 1.
  CHECK(llkp::lambda_excess(inst, 1.0) ==
        doctest::Approx(-4.0).epsilon(1e-15));

  CHECK_THROWS_AS(llkp::lambda_excess(inst, 0.0), llkp::NonPositiveLambda);
  CHECK_THROWS_AS(llkp::lambda_excess(inst, -0.5), llkp::NonPositiveLambda);
  CHECK_THROWS_AS(
      llkp::lambda_excess(inst, std::numeric_limits<double>::quiet_NaN()),
      llkp::NonPositiveLambda);
}

TEST_CASE("excess is exactly nonincreasing in lambda") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Instance inst = llkp_test::property_instance(seed, 2 + seed % 30);

    // Grid spanning below, across, and above all breakpoints.
    std::vector<double> grid;
    for (std::size_t j = 0; j < inst.size(); ++j) {
      const double r = inst.weights()[j] / inst.prices()[j];
      grid.push_back(0.5 * r);
      grid.push_back(r);
      grid.push_back(2.0 * r);
    }
    grid.push_back(1.0 / inst.capacity());
    grid.push_back(10.0 / inst.capacity());
    std::sort(grid.begin(), grid.end());

    double prev = std::numeric_limits<double>::infinity();
    for (double lambda : grid) {
      const double f = llkp::lambda_excess(inst, lambda);
      CHECK(f <= prev);
      prev = f;
    }
  }
}

TEST_CASE("bisection bracket endpoints straddle the root") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Instance inst = llkp_test::property_instance(seed, 2 + seed % 30);
    if (inst.price_sum() <= inst.capacity()) {
      continue;
    }
    double rmin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < inst.size(); ++j) {
      rmin = std::min(rmin, inst.weights()[j] / inst.prices()[j]);
    }
    // At the smallest ratio every variable caps, so the whole surplus shows.
    CHECK(llkp::lambda_excess(inst, rmin) ==
          doctest::Approx(inst.price_sum() - inst.capacity()).epsilon(1e-9));
    // At 1/m the spend is at most sum alpha * m = m up to rounding.
    CHECK(llkp::lambda_excess(inst, 1.0 / inst.capacity()) <=
          1e-13 * inst.capacity());
  }
}

TEST_CASE("bisection reproduces closed-form optima") {
  const Instance inst = golden();
  const double lambda = llkp::waterfill_multiplier(inst);
  CHECK(lambda == doctest::Approx(1.0 / 6.0).epsilon(1e-11));

  const llkp::Solution sol = llkp::solve_bisection(inst);
  CHECK(sol.tight);
  CHECK(sol.trace.terminal == llkp::Terminal::Interior);
  CHECK(sol.trace.rounds.empty());
  CHECK(max_dev(sol.x, std::vector{1.0, 1.0, 0.6666666666666666}) <= 1e-9);

  const Instance sym =
      llkp::validate(std::vector{0.5, 0.5}, std::vector{1.0, 1.0}, 1.0);
  CHECK(llkp::waterfill_multiplier(sym) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(max_dev(llkp::solve_bisection(sym).x, std::vector{0.5, 0.5}) <= 1e-11);

  const Instance skewed =
      llkp::validate(std::vector{0.7, 0.3}, std::vector{1.0, 2.0}, 2.0);
  CHECK(llkp::waterfill_multiplier(skewed) ==
        doctest::Approx(0.3).epsilon(1e-11));
  CHECK(max_dev(llkp::solve_bisection(skewed).x, std::vector{1.0, 0.5}) <=
        1e-11);
}

TEST_CASE("bisection takes everything on trivial instances") {
  const Instance trivial =
      llkp::validate(std::vector{1.0, 2.0}, std::vector{1.0, 1.0}, 2.0);
  const llkp::Solution sol = llkp::solve_bisection(trivial);
  CHECK(sol.x == std::vector<double>{1.0, 1.0});
  CHECK(sol.trace.terminal == llkp::Terminal::AllOnes);
  CHECK_THROWS_AS(llkp::waterfill_multiplier(trivial), llkp::BracketFailure);
}

TEST_CASE("bisection agrees with the exact solvers") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = llkp_test::property_instance(seed, 2 + seed % 99);
    const llkp::Solution exact = llkp::solve_sorted(inst);
    const llkp::Solution approx = llkp::solve_bisection(inst);
    CHECK(max_dev(exact.x, approx.x) <= 1e-8);
    if (inst.price_sum() > inst.capacity()) {
      const double lambda = llkp::waterfill_multiplier(inst);
      CHECK(std::abs(llkp::lambda_excess(inst, lambda)) <=
            1e-12 * inst.capacity());
    }
  }
}

TEST_CASE("iteration cap aborts a too-short bisection") {
  llkp::BisectionConfig cfg;
  cfg.max_iter = 2;
  CHECK_THROWS_AS(llkp::waterfill_multiplier(golden(), cfg),
                  llkp::MaxIterExceeded);

  // The default budget is ample: one halving per bit of a double.
  CHECK_NOTHROW(llkp::waterfill_multiplier(golden()));
}

TEST_CASE("random feasible points are deterministic and feasible") {
  const Instance inst = golden();

  const std::vector<double> a = llkp::random_feasible(inst, 42);
  const std::vector<double> b = llkp::random_feasible(inst, 42);
  CHECK(llkp_test::same_bits(a, b));

  const std::vector<double> c = llkp::random_feasible(inst, 43);
  CHECK_FALSE(llkp_test::same_bits(a, c));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::vector<double> z = llkp::random_feasible(inst, seed);
    REQUIRE(z.size() == inst.size());
    std::vector<double> spend(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
      CHECK(z[j] > 0.0);
      CHECK(z[j] <= 1.0);
      spend[j] = inst.prices()[j] * z[j];
    }
    CHECK(llkp::stable_sum(spend) <= inst.capacity());
  }

  // On trivial instances the raw draw is already feasible.
  const Instance trivial =
      llkp::validate(std::vector{1.0, 1.0}, std::vector{1.0, 1.0}, 5.0);
  const std::vector<double> z = llkp::random_feasible(trivial, 7);
  CHECK(llkp::stable_sum(llkp::allocation_of(trivial, z)) <=
        trivial.capacity());
}

TEST_CASE("no random feasible point beats the solver") {
  const Instance inst = golden();
  const double best = llkp::solve_sorted(inst).objective;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::vector<double> z = llkp::random_feasible(inst, seed);
    CHECK(llkp::objective(inst, z) <= best + 1e-12);
  }
}

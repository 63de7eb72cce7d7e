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

#include "llkp/model.hpp"

#include <cmath>
#include <string>

#include "llkp/errors.hpp"

namespace llkp {

Instance::Instance(std::vector<double> weights, std::vector<double> prices,
                   double m)
    : weights_(std::move(weights)),
      prices_(std::move(prices)),
      capacity_(m),
      weight_sum_(stable_sum(std::span<const double>(weights_))),
      price_sum_(stable_sum(std::span<const double>(prices_))) {}

Instance validate(std::span<const double> raw_alpha,
                  std::span<const double> raw_p, double raw_m) {
  if (raw_alpha.empty() || raw_p.empty()) {
    throw EmptyInstance("alpha and p must have at least one entry");
  }
  if (raw_alpha.size() != raw_p.size()) {
    throw LengthMismatch("alpha has length " + std::to_string(raw_alpha.size()) +
                         " but p has length " + std::to_string(raw_p.size()));
  }
  for (std::size_t j = 0; j < raw_alpha.size(); ++j) {
    if (!std::isfinite(raw_alpha[j])) {
      throw NonFinite("alpha[" + std::to_string(j) + "] is not finite");
    }
    if (!std::isfinite(raw_p[j])) {
      throw NonFinite("p[" + std::to_string(j) + "] is not finite");
    }
  }
  if (!std::isfinite(raw_m)) {
    throw NonFinite("m is not finite");
  }
  for (std::size_t j = 0; j < raw_alpha.size(); ++j) {
    if (!(raw_alpha[j] > 0.0)) {
      throw NonPositiveWeight("alpha[" + std::to_string(j) +
                              "] must be strictly positive");
    }
  }
  for (std::size_t j = 0; j < raw_p.size(); ++j) {
    if (!(raw_p[j] > 0.0)) {
      throw NonPositivePrice("p[" + std::to_string(j) +
                             "] must be strictly positive");
    }
  }
  if (!(raw_m > 0.0)) {
    throw NonPositiveCapacity("m must be strictly positive");
  }

  const double raw_sum = stable_sum(raw_alpha);
  if (!std::isfinite(raw_sum)) {
    throw NonFinite("sum of alpha overflows");
  }
  std::vector<double> alpha(raw_alpha.size());
  for (std::size_t j = 0; j < raw_alpha.size(); ++j) {
    alpha[j] = raw_alpha[j] / raw_sum;
    if (!(alpha[j] > 0.0) || !std::isfinite(alpha[j])) {
      throw NonFinite("alpha[" + std::to_string(j) +
                      "] underflows or overflows after normalization");
    }
  }
  return Instance(std::move(alpha),
                  std::vector<double>(raw_p.begin(), raw_p.end()), raw_m);
}

double objective(const Instance& inst, std::span<const double> x) {
  if (x.size() != inst.size()) {
    throw LengthMismatch("x has length " + std::to_string(x.size()) +
                         " but the instance has " + std::to_string(inst.size()));
  }
  const auto alpha = inst.weights();
  std::vector<double> terms(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] > 0.0)) {
      throw DomainError("x[" + std::to_string(j) +
                        "] must be strictly positive");
    }
    terms[j] = alpha[j] * std::log(x[j]);
  }
  return stable_sum(std::move(terms));
}

Instance scale_instance(const Instance& inst, double t) {
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw NonPositiveScale("scale factor must be finite and strictly positive");
  }
  std::vector<double> prices(inst.size());
  for (std::size_t j = 0; j < inst.size(); ++j) {
    prices[j] = t * inst.prices()[j];
  }
  return Instance(
      std::vector<double>(inst.weights().begin(), inst.weights().end()),
      std::move(prices), t * inst.capacity());
}

Instance from_allocation(std::span<const double> alpha,
                         std::span<const double> caps, double m) {
  return validate(alpha, caps, m);
}

std::vector<double> allocation_of(const Instance& inst,
                                  std::span<const double> x) {
  if (x.size() != inst.size()) {
    throw LengthMismatch("x has length " + std::to_string(x.size()) +
                         " but the instance has " + std::to_string(inst.size()));
  }
  std::vector<double> y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    y[j] = inst.prices()[j] * x[j];
  }
  return y;
}

}  // namespace llkp

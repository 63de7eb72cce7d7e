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
// Serialization of instances and solutions, and a seeded random-instance
// generator.
//
// Canonical instance document (JSON):
//     {"alpha": [...], "m": <num>, "p": [...], "version": 1}
// Canonical solution document (JSON):
//     {"fixed_rounds": [[...]], "lambda": <num>, "mu": [...],
//      "objective": <num>, "tight": <bool>, "version": 1, "x": [...]}
// lambda/mu appear only when a certificate is attached. Indices inside
// fixed_rounds are 1-based. Numbers are rendered as the shortest decimal
// that parses back to the same double, so serialize/parse round-trips are
// bit-identical and generated files are byte-stable.
//
// CSV alternative for instances (spreadsheet intake): a header line
// "m=<num>", then one "alpha,p" row per variable. The JSON document is
// canonical; the CSV is accepted, never emitted.

#ifndef LLKP_IO_HPP_
#define LLKP_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "llkp/model.hpp"
#include "llkp/solver.hpp"

namespace llkp {

// Knobs of the random-instance generator. Weights are drawn as
// exp(weight_skew * g_j) with g_j standard normal (skew 0 gives uniform
// weights), then normalized; prices are uniform in price_range; capacity is
// m = tightness * sum(p), so tightness < 1 guarantees a nontrivial instance
// and tightness = 1 the trivial boundary case.
struct GeneratorConfig {
  std::size_t L = 0;
  std::uint64_t seed = 0;
  double tightness = 0.6;                   // in (0, 1]
  std::pair<double, double> price_range{1.0, 2.0};  // 0 < lo <= hi
  double weight_skew = 0.0;                 // >= 0
};

// Parsed solution document. Mirrors the file exactly: fixed_rounds keeps the
// serialized 1-based indices, lambda/mu are absent when the document carries
// no certificate.
struct SolutionDoc {
  std::vector<double> x;
  double objective = 0.0;
  bool tight = false;
  std::vector<std::vector<std::size_t>> fixed_rounds;
  std::optional<double> lambda;
  std::vector<double> mu;
};

// Parses the canonical JSON instance document and validates it. Throws
// ParseError on malformed documents (bad JSON, missing field, wrong type,
// length mismatch, unsupported version); validation errors propagate.
Instance parse_instance(std::string_view text);

// Parses the CSV intake format. Errors as parse_instance.
Instance parse_instance_csv(std::string_view text);

// Emits the canonical instance document (normalized weights).
std::string serialize_instance(const Instance& inst);

// Emits the canonical solution document; attaches lambda/mu when cert is
// non-null. fixed_rounds indices are converted to 1-based.
std::string serialize_solution(const Solution& sol,
                               const DualCertificate* cert = nullptr);

// Parses a solution document. Throws ParseError.
SolutionDoc parse_solution(std::string_view text);

// Deterministic random instance. Throws ConfigError on an invalid config
// (L = 0, tightness outside (0, 1], bad price range, negative skew).
Instance generate_instance(const GeneratorConfig& cfg);

}  // namespace llkp

#endif  // LLKP_IO_HPP_

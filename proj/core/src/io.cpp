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

#include "llkp/io.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "llkp/errors.hpp"
#include "rng.hpp"

namespace llkp {
namespace {

using json = nlohmann::json;

json parse_document(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr,
                         /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError("malformed JSON document");
  }
  if (!doc.is_object()) {
    throw ParseError("top-level value must be an object");
  }
  if (doc.contains("version") &&
      !(doc["version"].is_number_integer() && doc["version"] == 1)) {
    throw ParseError("unsupported document version");
  }
  return doc;
}

std::vector<double> number_array(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  const json& arr = doc[key];
  if (!arr.is_array()) {
    throw ParseError(std::string("field \"") + key + "\" must be an array");
  }
  std::vector<double> values;
  values.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number()) {
      throw ParseError(std::string("field \"") + key +
                       "\" must contain only numbers");
    }
    values.push_back(v.get<double>());
  }
  return values;
}

double number_field(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  if (!doc[key].is_number()) {
    throw ParseError(std::string("field \"") + key + "\" must be a number");
  }
  return doc[key].get<double>();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view s, const char* what) {
  s = trim(s);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("cannot parse ") + what + " from \"" +
                     std::string(s) + "\"");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  const std::vector<double> alpha = number_array(doc, "alpha");
  const std::vector<double> p = number_array(doc, "p");
  const double m = number_field(doc, "m");
  if (alpha.size() != p.size()) {
    throw ParseError("alpha has " + std::to_string(alpha.size()) +
                     " entries but p has " + std::to_string(p.size()));
  }
  return validate(alpha, p, m);
}

Instance parse_instance_csv(std::string_view text) {
  std::vector<double> alpha;
  std::vector<double> p;
  bool have_m = false;
  double m = 0.0;

  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (!have_m) {
      if (!line.starts_with("m=")) {
        throw ParseError("first CSV line must be \"m=<num>\"");
      }
      m = parse_number(line.substr(2), "m");
      have_m = true;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("CSV row must be \"alpha,p\", got \"" +
                       std::string(line) + "\"");
    }
    alpha.push_back(parse_number(line.substr(0, comma), "alpha"));
    p.push_back(parse_number(line.substr(comma + 1), "p"));
  }
  if (!have_m) {
    throw ParseError("empty CSV document");
  }
  return validate(alpha, p, m);
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["version"] = 1;
  doc["alpha"] = json::array();
  doc["p"] = json::array();
  for (std::size_t j = 0; j < inst.size(); ++j) {
    doc["alpha"].push_back(inst.weights()[j]);
    doc["p"].push_back(inst.prices()[j]);
  }
  doc["m"] = inst.capacity();
  return doc.dump() + "\n";
}

std::string serialize_solution(const Solution& sol,
                               const DualCertificate* cert) {
  json doc;
  doc["version"] = 1;
  doc["x"] = json::array();
  for (double v : sol.x) {
    doc["x"].push_back(v);
  }
  doc["objective"] = sol.objective;
  doc["tight"] = sol.tight;
  json rounds = json::array();
  for (const TraceRound& round : sol.trace.rounds) {
    json group = json::array();
    for (std::size_t j : round.fixed_indices) {
      group.push_back(j + 1);  // serialized indices are 1-based
    }
    rounds.push_back(std::move(group));
  }
  doc["fixed_rounds"] = std::move(rounds);
  if (cert != nullptr) {
    doc["lambda"] = cert->lambda;
    doc["mu"] = json::array();
    for (double v : cert->mu) {
      doc["mu"].push_back(v);
    }
  }
  return doc.dump() + "\n";
}

SolutionDoc parse_solution(std::string_view text) {
  const json doc = parse_document(text);
  SolutionDoc out;
  out.x = number_array(doc, "x");
  out.objective = number_field(doc, "objective");
  if (!doc.contains("tight") || !doc["tight"].is_boolean()) {
    throw ParseError("missing or non-boolean field \"tight\"");
  }
  out.tight = doc["tight"].get<bool>();
  if (!doc.contains("fixed_rounds") || !doc["fixed_rounds"].is_array()) {
    throw ParseError("missing or non-array field \"fixed_rounds\"");
  }
  for (const json& group : doc["fixed_rounds"]) {
    if (!group.is_array()) {
      throw ParseError("fixed_rounds must contain arrays of indices");
    }
    std::vector<std::size_t> indices;
    indices.reserve(group.size());
    for (const json& v : group) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
        throw ParseError("fixed_rounds indices must be integers >= 1");
      }
      indices.push_back(static_cast<std::size_t>(v.get<std::int64_t>()));
    }
    out.fixed_rounds.push_back(std::move(indices));
  }
  const bool has_lambda = doc.contains("lambda");
  const bool has_mu = doc.contains("mu");
  if (has_lambda != has_mu) {
    throw ParseError("lambda and mu must appear together");
  }
  if (has_lambda) {
    out.lambda = number_field(doc, "lambda");
    out.mu = number_array(doc, "mu");
    if (out.mu.size() != out.x.size()) {
      throw ParseError("mu and x must have the same length");
    }
  }
  return out;
}

Instance generate_instance(const GeneratorConfig& cfg) {
  if (cfg.L == 0) {
    throw ConfigError("L must be at least 1");
  }
  if (!std::isfinite(cfg.tightness) || !(cfg.tightness > 0.0) ||
      cfg.tightness > 1.0) {
    throw ConfigError("tightness must lie in (0, 1]");
  }
  const auto [lo, hi] = cfg.price_range;
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo > 0.0) || hi < lo) {
    throw ConfigError("price_range must satisfy 0 < lo <= hi");
  }
  if (!std::isfinite(cfg.weight_skew) || cfg.weight_skew < 0.0) {
    throw ConfigError("weight_skew must be nonnegative");
  }

  detail::SplitMix64 rng(cfg.seed);
  std::vector<double> alpha(cfg.L);
  for (double& a : alpha) {
    a = std::exp(cfg.weight_skew * rng.normal());
  }
  std::vector<double> p(cfg.L);
  for (double& v : p) {
    v = lo + (hi - lo) * rng.uniform01();
    if (v > hi) {
      v = hi;
    }
  }
  const double m = cfg.tightness * stable_sum(std::span<const double>(p));
  return validate(alpha, p, m);
}

}  // namespace llkp

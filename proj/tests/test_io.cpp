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

#include <cstdint>
#include <string>
#include <vector>

#include <doctest.h>

#include "llkp/errors.hpp"
#include "llkp/io.hpp"
#include "llkp/model.hpp"
#include "llkp/solver.hpp"

#include "test_util.hpp"

using llkp::Instance;
using llkp_test::golden;
using llkp_test::same_bits;

namespace {

const char kGoldenJson[] =
    R"({"alpha": [1.0, 1.0, 1.0], "m": 5.0, "p": [1.0, 2.0, 3.0], "version": 1})";

}  // namespace

TEST_CASE("parse the canonical instance document") {
  const Instance inst = llkp::parse_instance(kGoldenJson);
  const Instance direct = golden();
  CHECK(same_bits(inst.weights(), direct.weights()));
  CHECK(same_bits(inst.prices(), direct.prices()));
  CHECK(inst.capacity() == 5.0);

  // Integer literals are numbers too, and version is optional.
  const Instance ints = llkp::parse_instance(R"({"alpha":[1,1],"p":[1,1],"m":2})");
  CHECK(ints.capacity() == 2.0);
  CHECK(ints.weights()[0] == 0.5);
}

TEST_CASE("instance parsing rejects malformed documents") {
  CHECK_THROWS_AS(llkp::parse_instance("not json"), llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance("[1,2,3]"), llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance(R"({"alpha":[1],"p":[1]})"),
                  llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance(R"({"alpha":[1],"m":1})"),
                  llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance(R"({"alpha":[1,1],"p":[1],"m":1})"),
                  llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance(R"({"alpha":["x"],"p":[1],"m":1})"),
                  llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance(R"({"alpha":[1],"p":[1],"m":"five"})"),
                  llkp::ParseError);
  CHECK_THROWS_AS(
      llkp::parse_instance(R"({"alpha":[1],"p":[1],"m":1,"version":2})"),
      llkp::ParseError);

  // Structurally sound documents still go through full validation.
  CHECK_THROWS_AS(llkp::parse_instance(R"({"alpha":[1],"p":[1],"m":0})"),
                  llkp::NonPositiveCapacity);
  CHECK_THROWS_AS(llkp::parse_instance(R"({"alpha":[-1],"p":[1],"m":1})"),
                  llkp::NonPositiveWeight);
}

TEST_CASE("csv intake matches the json intake") {
  const Instance csv = llkp::parse_instance_csv("m=5\n1,1\n1,2\n1,3\n");
  const Instance json = llkp::parse_instance(kGoldenJson);
  CHECK(same_bits(csv.weights(), json.weights()));
  CHECK(same_bits(csv.prices(), json.prices()));
  CHECK(csv.capacity() == json.capacity());

  // Whitespace, CRLF line ends, and blank lines are tolerated.
  const Instance messy =
      llkp::parse_instance_csv("m=2\r\n\r\n 0.5 , 1 \r\n0.5,1\r\n");
  CHECK(messy.capacity() == 2.0);
  CHECK(same_bits(messy.prices(), std::vector{1.0, 1.0}));

  CHECK_THROWS_AS(llkp::parse_instance_csv(""), llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance_csv("1,1\n"), llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance_csv("m=5\n1\n"), llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance_csv("m=5\n1,abc\n"), llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance_csv("m=\n1,1\n"), llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_instance_csv("m=5\n"), llkp::EmptyInstance);
}

TEST_CASE("solution documents carry the expected fields") {
  const Instance inst = golden();
  const llkp::Solution sol = llkp::solve_sorted(inst);
  const llkp::DualCertificate cert = llkp::dual_certificate(inst, sol);

  const std::string bare = llkp::serialize_solution(sol);
  CHECK(bare.find("\"fixed_rounds\":[[1]]") != std::string::npos);
  CHECK(bare.find("\"tight\":true") != std::string::npos);
  CHECK(bare.find("\"version\":1") != std::string::npos);
  CHECK(bare.find("0.6666666666666666") != std::string::npos);
  CHECK(bare.find("lambda") == std::string::npos);
  CHECK(bare.back() == '\n');

  const std::string certified = llkp::serialize_solution(sol, &cert);
  CHECK(certified.find("\"lambda\":0.16666666666666666") != std::string::npos);
  CHECK(certified.find("\"mu\":[") != std::string::npos);
}

TEST_CASE("solution documents round-trip bit-identically") {
  const Instance inst = golden();
  const llkp::Solution sol = llkp::solve_sorted(inst);
  const llkp::DualCertificate cert = llkp::dual_certificate(inst, sol);

  const std::string text = llkp::serialize_solution(sol, &cert);
  const llkp::SolutionDoc doc = llkp::parse_solution(text);
  CHECK(same_bits(doc.x, sol.x));
  CHECK(same_bits(doc.objective, sol.objective));
  CHECK(doc.tight == sol.tight);
  REQUIRE(doc.fixed_rounds.size() == 1);
  CHECK(doc.fixed_rounds[0] == std::vector<std::size_t>{1});
  REQUIRE(doc.lambda.has_value());
  CHECK(same_bits(*doc.lambda, cert.lambda));
  CHECK(same_bits(doc.mu, cert.mu));

  // Serializing the parse gives back the exact bytes.
  llkp::Solution rebuilt;
  rebuilt.x = doc.x;
  rebuilt.objective = doc.objective;
  rebuilt.tight = doc.tight;
  rebuilt.trace = sol.trace;
  CHECK(llkp::serialize_solution(rebuilt, &cert) == text);

  const std::string bare = llkp::serialize_solution(sol);
  const llkp::SolutionDoc bare_doc = llkp::parse_solution(bare);
  CHECK_FALSE(bare_doc.lambda.has_value());
  CHECK(bare_doc.mu.empty());

  // A trivial instance has no fixing rounds at all.
  const Instance trivial =
      llkp::validate(std::vector{1.0, 1.0}, std::vector{1.0, 1.0}, 3.0);
  const std::string loose =
      llkp::serialize_solution(llkp::solve_iterative(trivial));
  CHECK(loose.find("\"fixed_rounds\":[]") != std::string::npos);
  CHECK(llkp::parse_solution(loose).fixed_rounds.empty());
}

TEST_CASE("random solutions round-trip bit-identically") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = llkp_test::property_instance(seed, 50);
    const llkp::Solution sol = llkp::solve_sorted(inst);
    const bool nontrivial = inst.price_sum() > inst.capacity();
    llkp::DualCertificate cert;
    if (nontrivial) {
      cert = llkp::dual_certificate(inst, sol);
    }
    const std::string text =
        llkp::serialize_solution(sol, nontrivial ? &cert : nullptr);
    const llkp::SolutionDoc doc = llkp::parse_solution(text);
    CHECK(same_bits(doc.x, sol.x));
    CHECK(same_bits(doc.objective, sol.objective));
    if (nontrivial) {
      REQUIRE(doc.lambda.has_value());
      CHECK(same_bits(*doc.lambda, cert.lambda));
      CHECK(same_bits(doc.mu, cert.mu));
    }
  }
}

TEST_CASE("solution parsing rejects malformed documents") {
  CHECK_THROWS_AS(llkp::parse_solution("{}"), llkp::ParseError);
  CHECK_THROWS_AS(llkp::parse_solution("nonsense"), llkp::ParseError);
  CHECK_THROWS_AS(
      llkp::parse_solution(
          R"({"x":[1],"objective":0,"tight":"yes","fixed_rounds":[]})"),
      llkp::ParseError);
  // Round indices are 1-based.
  CHECK_THROWS_AS(
      llkp::parse_solution(
          R"({"x":[1],"objective":0,"tight":true,"fixed_rounds":[[0]]})"),
      llkp::ParseError);
  // Multipliers must come as a pair with matching length.
  CHECK_THROWS_AS(
      llkp::parse_solution(
          R"({"x":[1],"objective":0,"tight":true,"fixed_rounds":[],"lambda":1})"),
      llkp::ParseError);
  CHECK_THROWS_AS(
      llkp::parse_solution(
          R"({"x":[1],"objective":0,"tight":true,"fixed_rounds":[],)"
          R"("lambda":1,"mu":[0,0]})"),
      llkp::ParseError);
}

TEST_CASE("instance documents survive a serialize-parse cycle") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Instance inst = llkp_test::property_instance(seed, 2 + seed * 5);
    const std::string text = llkp::serialize_instance(inst);
    const Instance back = llkp::parse_instance(text);
    CHECK(same_bits(back.prices(), inst.prices()));
    CHECK(back.capacity() == inst.capacity());
    // Weights re-normalize on intake, which can move last bits, so the
    // cycle is value-stable rather than byte-stable.
    CHECK(llkp_test::max_dev(back.weights(), inst.weights()) <= 1e-15);
    const Instance again = llkp::parse_instance(llkp::serialize_instance(back));
    CHECK(same_bits(again.prices(), back.prices()));
    CHECK(again.capacity() == back.capacity());
    CHECK(llkp_test::max_dev(again.weights(), back.weights()) <= 1e-15);
  }
}

TEST_CASE("generator is deterministic in the seed") {
  llkp::GeneratorConfig cfg;
  cfg.L = 40;
  cfg.seed = 99;
  cfg.weight_skew = 1.0;

  const Instance a = llkp::generate_instance(cfg);
  const Instance b = llkp::generate_instance(cfg);
  CHECK(same_bits(a.weights(), b.weights()));
  CHECK(same_bits(a.prices(), b.prices()));
  CHECK(a.capacity() == b.capacity());

  cfg.seed = 100;
  const Instance c = llkp::generate_instance(cfg);
  CHECK_FALSE(same_bits(a.prices(), c.prices()));
}

TEST_CASE("generator respects its shape parameters") {
  llkp::GeneratorConfig cfg;
  cfg.L = 64;
  cfg.seed = 5;

  const Instance flat = llkp::generate_instance(cfg);
  REQUIRE(flat.size() == 64);
  for (double w : flat.weights()) {
    CHECK(w == flat.weights()[0]);
  }
  for (double p : flat.prices()) {
    CHECK(p >= 1.0);
    CHECK(p <= 2.0);
  }
  // Default tightness leaves the instance nontrivial.
  CHECK(flat.price_sum() > flat.capacity());
  CHECK(flat.capacity() ==
        doctest::Approx(0.6 * flat.price_sum()).epsilon(1e-12));

  cfg.weight_skew = 3.0;
  const Instance skewed = llkp::generate_instance(cfg);
  CHECK_FALSE(same_bits(skewed.weights(), flat.weights()));

  cfg.price_range = {1.5, 1.5};
  const Instance pinned = llkp::generate_instance(cfg);
  for (double p : pinned.prices()) {
    CHECK(p == 1.5);
  }

  cfg.price_range = {1.0, 2.0};
  cfg.tightness = 1.0;
  const Instance full = llkp::generate_instance(cfg);
  CHECK(full.capacity() == full.price_sum());
  CHECK(llkp::solve_iterative(full).trace.terminal ==
        llkp::Terminal::AllOnes);
}

TEST_CASE("generator rejects bad configurations") {
  llkp::GeneratorConfig cfg;
  cfg.L = 4;
  cfg.seed = 1;

  llkp::GeneratorConfig bad = cfg;
  bad.L = 0;
  CHECK_THROWS_AS(llkp::generate_instance(bad), llkp::ConfigError);

  bad = cfg;
  bad.tightness = 0.0;
  CHECK_THROWS_AS(llkp::generate_instance(bad), llkp::ConfigError);
  bad.tightness = 1.5;
  CHECK_THROWS_AS(llkp::generate_instance(bad), llkp::ConfigError);

  bad = cfg;
  bad.price_range = {0.0, 2.0};
  CHECK_THROWS_AS(llkp::generate_instance(bad), llkp::ConfigError);
  bad.price_range = {2.0, 1.0};
  CHECK_THROWS_AS(llkp::generate_instance(bad), llkp::ConfigError);

  bad = cfg;
  bad.weight_skew = -1.0;
  CHECK_THROWS_AS(llkp::generate_instance(bad), llkp::ConfigError);
}

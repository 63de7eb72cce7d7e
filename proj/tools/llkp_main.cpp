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
// Command-line front door: solve, verify, gen, bench.
//
// Exit codes: 0 success, 1 input error (flags, files, parsing, validation),
// 2 internal certificate failure (a solver bug by construction), 3
// verification failure.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "llkp/errors.hpp"
#include "llkp/io.hpp"
#include "llkp/model.hpp"
#include "llkp/oracle.hpp"
#include "llkp/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCertificateFailure = 2;
constexpr int kExitVerificationFailure = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw llkp::ParseError("cannot open \"" + path + "\" for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw llkp::ParseError("cannot open \"" + path + "\" for writing");
  }
  out << content;
  if (!out) {
    throw llkp::ParseError("cannot write \"" + path + "\"");
  }
}

// Instances are canonically JSON; the CSV intake is sniffed by the first
// non-whitespace byte.
llkp::Instance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return llkp::parse_instance(text);
  }
  return llkp::parse_instance_csv(text);
}

double parse_flag_number(std::string_view s, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw llkp::ConfigError(std::string("cannot parse ") + what + " from \"" +
                            std::string(s) + "\"");
  }
  return value;
}

std::pair<double, double> parse_price_range(const std::string& s) {
  const std::size_t comma = s.find(',');
  if (comma == std::string::npos) {
    throw llkp::ConfigError("--price-range must be \"lo,hi\"");
  }
  return {parse_flag_number(std::string_view(s).substr(0, comma), "price lo"),
          parse_flag_number(std::string_view(s).substr(comma + 1), "price hi")};
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string_view item =
        std::string_view(s).substr(start, comma == std::string::npos
                                              ? s.size() - start
                                              : comma - start);
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      throw llkp::ConfigError("cannot parse --sizes entry \"" +
                              std::string(item) + "\"");
    }
    sizes.push_back(value);
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return sizes;
}

// Deterministic per-(seed, L, rep) generator seed for bench.
std::uint64_t bench_seed(std::uint64_t seed, std::uint64_t L, std::uint64_t rep) {
  std::uint64_t z = seed ^ (L * 0x9E3779B97F4A7C15ULL) ^
                    (rep * 0xBF58476D1CE4E5B9ULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void print_report(const llkp::KktReport& rep) {
  std::cout << std::setprecision(17)
            << "stationarity_residual = " << rep.stationarity_residual << "\n"
            << "comp_slack_residual = " << rep.comp_slack_residual << "\n"
            << "primal_feasibility = " << (rep.primal_feasibility ? "true" : "false") << "\n"
            << "dual_feasibility = " << (rep.dual_feasibility ? "true" : "false") << "\n"
            << "mu_mass_ok = " << (rep.mu_mass_ok ? "true" : "false") << "\n"
            << "verdict = " << (rep.verdict ? "true" : "false") << "\n";
}

// Rebuilds a Solution from a parsed document so dual_certificate can use the
// trace; per-round residual capacity and weight mass are recomputed from the
// instance, which reproduces the solver's own subtractive updates.
llkp::Solution rebuild_solution(const llkp::Instance& inst,
                                const llkp::SolutionDoc& doc) {
  llkp::Solution sol;
  sol.x = doc.x;
  sol.objective = doc.objective;
  sol.tight = doc.tight;
  double residual = inst.capacity();
  double mass = inst.weight_sum();
  for (const std::vector<std::size_t>& group : doc.fixed_rounds) {
    llkp::TraceRound round;
    std::vector<double> group_p;
    std::vector<double> group_alpha;
    for (std::size_t one_based : group) {
      if (one_based < 1 || one_based > inst.size()) {
        throw llkp::ParseError("fixed_rounds index " +
                               std::to_string(one_based) + " is out of range");
      }
      const std::size_t j = one_based - 1;
      round.fixed_indices.push_back(j);
      group_p.push_back(inst.prices()[j]);
      group_alpha.push_back(inst.weights()[j]);
    }
    residual -= llkp::stable_sum(std::move(group_p));
    mass -= llkp::stable_sum(std::move(group_alpha));
    round.residual_capacity = residual;
    round.weight_mass = mass;
    sol.trace.rounds.push_back(std::move(round));
  }
  sol.trace.terminal = llkp::Terminal::Interior;
  return sol;
}

int run_solve(const std::string& input, const std::string& output,
              const std::string& method, double eps, bool with_certificate) {
  const llkp::Instance inst = load_instance(input);
  llkp::Solution sol;
  if (method == "iterative") {
    sol = llkp::solve_iterative(inst, eps);
  } else if (method == "bisection") {
    sol = llkp::solve_bisection(inst);
  } else {
    sol = llkp::solve_sorted(inst, eps);
  }

  std::string doc;
  if (with_certificate && inst.price_sum() > inst.capacity()) {
    llkp::DualCertificate cert;
    llkp::KktReport rep;
    try {
      cert = llkp::dual_certificate(inst, sol, eps);
      rep = llkp::check_kkt(inst, sol.x, cert, std::max(eps, 1e-12));
    } catch (const llkp::Error& e) {
      std::cerr << "internal certificate failure: " << e.what() << "\n";
      return kExitCertificateFailure;
    }
    if (!rep.verdict) {
      std::cerr << "internal certificate failure: KKT verdict is false\n";
      print_report(rep);
      return kExitCertificateFailure;
    }
    doc = llkp::serialize_solution(sol, &cert);
  } else {
    if (with_certificate) {
      std::cerr << "note: trivial instance (price sum <= capacity); "
                   "feasibility of the all-ones point is the certificate, "
                   "no multipliers attached\n";
    }
    doc = llkp::serialize_solution(sol);
  }
  write_file(output, doc);
  return kExitOk;
}

int run_verify(const std::string& instance_path,
               const std::string& solution_path, double eps) {
  const llkp::Instance inst = load_instance(instance_path);
  const llkp::SolutionDoc doc = llkp::parse_solution(read_file(solution_path));
  if (doc.x.size() != inst.size()) {
    std::cerr << "error: solution has " << doc.x.size()
              << " coordinates but the instance has " << inst.size() << "\n";
    return kExitInputError;
  }
  if (!doc.mu.empty() && doc.mu.size() != inst.size()) {
    std::cerr << "error: mu has " << doc.mu.size()
              << " coordinates but the instance has " << inst.size() << "\n";
    return kExitInputError;
  }

  if (inst.price_sum() <= inst.capacity()) {
    // Trivial instance: the all-ones point is the optimum, so verification
    // is feasibility plus every coordinate at its bound.
    bool ok = true;
    for (double v : doc.x) {
      ok = ok && v > 0.0 && std::abs(v - 1.0) <= eps;
    }
    std::cout << "trivial instance: the all-ones point is optimal\n"
              << "verdict = " << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitVerificationFailure;
  }

  llkp::DualCertificate cert;
  if (doc.lambda.has_value()) {
    cert.lambda = *doc.lambda;
    cert.mu = doc.mu;
  } else {
    try {
      cert = llkp::dual_certificate(inst, rebuild_solution(inst, doc), eps);
    } catch (const llkp::InconsistentSolution& e) {
      std::cout << "primal infeasible: " << e.what() << "\n"
                << "verdict = false\n";
      return kExitVerificationFailure;
    }
  }

  llkp::KktReport rep;
  try {
    rep = llkp::check_kkt(inst, doc.x, cert, eps);
  } catch (const llkp::DomainError& e) {
    std::cout << "primal infeasible: " << e.what() << "\n"
              << "verdict = false\n";
    return kExitVerificationFailure;
  }
  print_report(rep);
  return rep.verdict ? kExitOk : kExitVerificationFailure;
}

int run_gen(std::size_t L, std::uint64_t seed, double tightness,
            const std::string& price_range, double skew,
            const std::string& output) {
  llkp::GeneratorConfig cfg;
  cfg.L = L;
  cfg.seed = seed;
  cfg.tightness = tightness;
  cfg.price_range = parse_price_range(price_range);
  cfg.weight_skew = skew;
  const llkp::Instance inst = llkp::generate_instance(cfg);
  write_file(output, llkp::serialize_instance(inst));
  return kExitOk;
}

int run_bench(const std::string& sizes_flag, std::uint64_t seed, int reps) {
  const std::vector<std::size_t> sizes = parse_sizes(sizes_flag);
  if (sizes.empty() || reps < 1) {
    throw llkp::ConfigError("--sizes needs at least one entry and --reps >= 1");
  }
  const char* const methods[] = {"iterative", "sorted", "bisection"};
  std::cout << "L,method,rep,wall_time_ms,max_dev\n";
  for (std::size_t L : sizes) {
    for (int rep = 0; rep < reps; ++rep) {
      llkp::GeneratorConfig cfg;
      cfg.L = L;
      cfg.seed = bench_seed(seed, L, static_cast<std::uint64_t>(rep));
      cfg.tightness = 0.6;
      cfg.price_range = {1.0, 2.0};
      cfg.weight_skew = 1.0;
      const llkp::Instance inst = llkp::generate_instance(cfg);
      const llkp::Solution oracle = llkp::solve_bisection(inst);
      for (const char* method : methods) {
        const auto t0 = std::chrono::steady_clock::now();
        llkp::Solution sol;
        if (std::string_view(method) == "iterative") {
          sol = llkp::solve_iterative(inst);
        } else if (std::string_view(method) == "sorted") {
          sol = llkp::solve_sorted(inst);
        } else {
          sol = llkp::solve_bisection(inst);
        }
        const auto t1 = std::chrono::steady_clock::now();
        double dev = 0.0;
        for (std::size_t j = 0; j < inst.size(); ++j) {
          dev = std::max(dev, std::abs(sol.x[j] - oracle.x[j]));
        }
        const double ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::cout << L << "," << method << "," << rep << ","
                  << std::fixed << std::setprecision(3) << ms
                  << std::defaultfloat << std::setprecision(6) << ","
                  << dev << "\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for the log-linear continuous knapsack problem"};
  app.require_subcommand(1);

  std::string solve_input;
  std::string solve_output;
  std::string solve_method = "sorted";
  double solve_eps = llkp::kDefaultEps;
  bool solve_with_certificate = false;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("-i,--input", solve_input, "instance file (JSON or CSV)")
      ->required();
  solve->add_option("-o,--output", solve_output, "solution file to write")
      ->required();
  solve->add_option("--method", solve_method, "iterative|sorted|bisection")
      ->check(CLI::IsMember({"iterative", "sorted", "bisection"}));
  solve->add_option("--eps", solve_eps, "relative boundary tolerance")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--with-certificate", solve_with_certificate,
                  "attach lambda/mu and self-check the KKT conditions");

  std::string verify_instance;
  std::string verify_solution;
  double verify_eps = llkp::kDefaultEps;
  CLI::App* verify =
      app.add_subcommand("verify", "check a solution file against an instance");
  verify->add_option("-i,--instance", verify_instance, "instance file")
      ->required();
  verify->add_option("-s,--solution", verify_solution, "solution file")
      ->required();
  verify->add_option("--eps", verify_eps, "verification tolerance")
      ->check(CLI::PositiveNumber);

  std::size_t gen_L = 0;
  std::uint64_t gen_seed = 0;
  double gen_tightness = 0.6;
  std::string gen_price_range = "1,2";
  double gen_skew = 0.0;
  std::string gen_output;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("-L", gen_L, "number of variables")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--tightness", gen_tightness,
                  "capacity as a fraction of the price sum, in (0,1]");
  gen->add_option("--price-range", gen_price_range, "price bounds \"lo,hi\"");
  gen->add_option("--skew", gen_skew, "weight skew (0 = uniform weights)");
  gen->add_option("-o,--output", gen_output, "instance file to write")
      ->required();

  std::string bench_sizes;
  std::uint64_t bench_seed_flag = 0;
  int bench_reps = 3;
  CLI::App* bench = app.add_subcommand(
      "bench", "time all methods on generated instances, CSV on stdout");
  bench->add_option("--sizes", bench_sizes, "comma-separated instance sizes")
      ->required();
  bench->add_option("--seed", bench_seed_flag, "base seed")->required();
  bench->add_option("--reps", bench_reps, "repetitions per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed()) {
      return run_solve(solve_input, solve_output, solve_method, solve_eps,
                       solve_with_certificate);
    }
    if (verify->parsed()) {
      return run_verify(verify_instance, verify_solution, verify_eps);
    }
    if (gen->parsed()) {
      return run_gen(gen_L, gen_seed, gen_tightness, gen_price_range, gen_skew,
                     gen_output);
    }
    if (bench->parsed()) {
      return run_bench(bench_sizes, bench_seed_flag, bench_reps);
    }
  } catch (const llkp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

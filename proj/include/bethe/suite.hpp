#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bethe/gl2rep.hpp"
#include "bethe/random.hpp"
#include "bethe/report.hpp"
#include "bethe/unipoly.hpp"

namespace bethe {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

// Bad flags or config values; the CLI maps this to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned precision = 128;
  int tolerance = 40;  // comparisons at 2^-tolerance where a fixed bound is used
  int n = 4;           // largest n per suite
  std::vector<std::pair<int, int>> kd{{0, 1}, {1, 1}, {0, 2}, {2, 1}, {1, 2}};
  std::uint64_t seed = 1;
  std::vector<std::string> suites;
  unsigned jobs = 0;  // 0: hardware concurrency
  bool timings = false;
  std::string golden_dir;  // elimination goldens are compared when set

  // Throws ConfigError.
  void validate() const;
  Json to_json() const;
  // Fields with the flag names; unknown keys are an error.
  void merge_json(const Json& j);
};

struct Instance {
  std::string suite;
  std::string name;
  Json params;
  Report report;
  double seconds = 0;
};

struct Certificate {
  RunConfig config;
  std::vector<Instance> instances;
  bool ok() const;
  Json to_json() const;
  // Canonical text: sorted keys, two-space indent, trailing newline.
  std::string dump() const;
};

// Runs the selected suites ("core", "spectral", "elimination",
// "correspondence", or "all") on a worker pool. Exceptions inside an instance
// become failed checks.
Certificate run_suite(const RunConfig& cfg);

// Deterministic content for golden/elimination/k{K}_d{D}.json.
Json elimination_golden(int k, int d);
std::string golden_name(int k, int d);
// Byte comparison of canonical dumps; detail lists the differing JSON paths.
// With bless the file is (re)written and the check passes.
Report golden_compare(const std::string& path, const Json& computed, bool bless);
std::string canonical_dump(const Json& j);

// Monic F0 of degree k and monic G0 of degree n-k+1, other coefficients
// uniform in [-5, 5], redrawn until Wr(F0, G0) has degree n and only real
// roots (repeated roots allowed). Returns false when max_draws is exhausted.
bool generic_pair(int n, int k, Rng& rng, int max_draws, UniPoly<Rational>& F0, UniPoly<Rational>& G0, int& draws);

// Seed for the i-th stream of a (tag, n, k) family.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, int n, int k, int i);

Json to_json(const Report& r);

// U_1 against sum_s e21^(s) for the nilpotent K and against 0 for K = 0.
Report u1_check(const EvalModule& m);
// Blocks, leaves and leaf operators of one module, plus the block algebra and
// singular spectrum checks. Fit residuals are compared with 2^-tolerance.
Report leaf_report(const EvalModule& m, unsigned precision, int tolerance, std::uint64_t seed);

}  // namespace bethe

#pragma once

// Named verification suites shared by the kdtheta CLI and the acceptance
// runner. Every check produces one record; reports serialize to JSON with a
// fixed key and record order so that equal configs give identical bytes.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdt/enveloping.hpp"
#include "kdt/sp_rep.hpp"

namespace kdt {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  std::string algebra = "heisenberg:1";
  std::vector<std::string> suites;
  int degree_bound = 3;
  int truncation = 4;
  std::uint64_t seed = 42;
  int c_min = -3, c_max = 6;
  int samples = 50;
  int exactness_degree = 4;
  // singular suite: U and c
  std::string module = "pi1";
  std::string c = "1";
  int threads = 0;
};

struct CheckRecord {
  std::string suite;
  std::string name;
  bool passed = false;
  int checked = 0;
  nlohmann::ordered_json witness;  // first failure; null when passed
  nlohmann::ordered_json data;     // informational output, null if none
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;

  int passed() const;
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  bool ok() const { return failed() == 0; }
  nlohmann::ordered_json to_json() const;
  std::string to_table() const;
};

/// Suites in canonical order.
const std::vector<std::string>& suite_names();
/// Validates the config (BadConfig on empty/unknown suites or bad bounds),
/// loads the algebra and runs the selected suites in canonical order.
Report run_suites(const RunConfig& config);

std::vector<CheckRecord> contact_checks(const Enveloping& h);
std::vector<CheckRecord> exterior_checks(const ContactLieData& d);
/// Exhaustive up to degree_bound, sampled up to degree_bound + 2.
std::vector<CheckRecord> hopf_checks(const Enveloping& h, int degree_bound, std::uint64_t seed);
std::vector<CheckRecord> sp_checks(const SpGenerators& g);
std::vector<CheckRecord> verify_core(const Enveloping& h, const RunConfig& config);
std::vector<CheckRecord> rumin_suite(const Enveloping& h, const RunConfig& config);
std::vector<CheckRecord> singular_suite(const Enveloping& h, const RunConfig& config);
std::vector<CheckRecord> classify_suite(const Enveloping& h, const RunConfig& config);
std::vector<CheckRecord> annihilation_records(const Enveloping& h, const RunConfig& config);

/// "trivial", "pi<n>" or "sym2" to the weight code used by the scan.
int parse_module(const SpGenerators& g, const std::string& name);

}  // namespace kdt

#pragma once

// Claim orchestration: every quantitative check in the library becomes a
// claim with a stable id, a status, the witnesses it covered, and timing.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chardeg/groups.hpp"

namespace chardeg::verify {

enum class Status { pass, fail, inconclusive, out_of_scope };
std::string to_string(Status s);

struct ClaimResult {
  std::string id;
  Status status = Status::pass;
  std::vector<std::string> witnesses;  // parameter values or ranges covered
  std::vector<std::string> failures;   // witnesses that did not hold
  std::string note;
  double seconds = 0;
};

/// Section names accepted in Config::sections.
inline const std::vector<std::string> kSections = {
    "partitions", "rho", "psl2", "lie38", "seitz", "situations",
    "poly", "gagola", "bounds", "records"};

struct Config {
  std::set<std::string> sections;  // empty: all
  int n_direct_max = 60;
  long n_induct_max = 10000;
  std::vector<long> spot_checks = {1000000};
  unsigned an_epsilon_max = 20;
  std::uint64_t psl2_max_q = 10000;
  unsigned psl2_even_f_max = 20;
  unsigned lie_max_rank = 12;
  std::uint64_t lie_max_q = 32;
  std::optional<std::string> torus_table;
  std::vector<std::string> degree_files;
  unsigned situation_n_min = 9;
  unsigned situation_n_max = 12;
  unsigned situation_r = 4;
  unsigned situation_max_dk = 6;
  unsigned random_shapes = 500;
  std::uint64_t seed = 20240601;
  std::vector<unsigned> gagola_q = {2, 3, 4, 5};
  std::optional<std::string> group_spec;
  unsigned jobs = 1;
};

struct Run {
  std::vector<ClaimResult> results;
  /// 0 iff no claim failed or was inconclusive.
  int exit_code() const;
};

/// Validates the configuration and loads its files first; throws ConfigError
/// before any check runs.
Run verify_all(const Config& config);

/// UTF-8 JSON array, keys sorted, claims in run order.
std::string report_json(const Run& run, bool include_timing = true);

/// Named builders for the character-table oracle sweep (orders <= 500).
std::vector<std::pair<std::string, std::function<groups::GroupTable()>>> oracle_groups();

}  // namespace chardeg::verify

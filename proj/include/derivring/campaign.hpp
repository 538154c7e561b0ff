#pragma once

// Seeded verification campaigns and their reports.
//
// Instance k of a campaign with seed S draws all of its randomness from
// Rng(derive_seed(S, k)); the report lists instances in index order, so a config
// always yields the same report regardless of how instances are scheduled.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derivring/serialize.hpp"

namespace derivring {

enum class Suite {
  Theorem1,
  LemmaCross,
  LemmaOffdiag,
  LemmaDiagDiff,
  Extend,
  TwoGenerator,
  JordanDiag,
  JordanTheorem,
};

Suite parse_suite(std::string_view text);
std::string to_string(Suite suite);

struct CampaignConfig {
  Suite suite = Suite::Theorem1;
  RingDescriptor ring = RingDescriptor::zmod(5);
  std::size_t n = 2;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  NoiseSpec noise = NoiseSpec::None;
  unsigned max_degree = 3;
  std::size_t samples = 50;  ///< per-instance samples for the theorem suites
  std::size_t max_len = 6;   ///< word length for two-generator
  /// Base derivation for extend: "zero", "d/dt" or "t*d/dt". Defaults to d/dt on
  /// polynomial rings and zero on Z_m.
  std::optional<std::string> delta;
  std::size_t threads = 0;  ///< 0 = hardware concurrency; never affects the report
};

struct Failure {
  std::size_t instance;
  std::uint64_t seed;  ///< the instance seed
  std::string probe;
  Json lhs;
  Json rhs;
};

struct Report {
  CampaignConfig config;
  std::size_t instances = 0;
  std::size_t checked = 0;  ///< individual identities evaluated
  std::vector<Failure> failures;
  double wall_seconds = 0;  ///< not part of the serialized report

  bool ok() const noexcept { return failures.empty(); }
};

/// Throws InvalidRing / DomainError on a bad configuration.
void validate_config(const CampaignConfig& config);

Report run_campaign(const CampaignConfig& config);

/// Deterministic JSON report (wall time excluded).
Json report_to_json(const Report& report);
/// Deterministic human-readable report.
std::string report_to_text(const Report& report);

/// 0 when no property was violated, 1 otherwise.
int exit_code(const Report& report);

}  // namespace derivring

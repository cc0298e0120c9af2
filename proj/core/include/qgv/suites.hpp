#pragma once

#include "qgv/report.hpp"
#include "qgv/qscalar.hpp"

#include <optional>
#include <string>

namespace qgv {

struct SuiteConfig {
  std::string suite = "all";
  int max_deg = 4;                  // monomial degree bound for operator suites
  int max_len = 3;                  // word length bound for nilpotency suites
  std::optional<Rational> s0;       // s specialization; nullopt = generic
  uint64_t seed = 1;
  bool dump_F = false;
  std::string inject_fault;         // test hook: suite tag whose rules are damaged

  void validate() const;            // throws std::invalid_argument on bad config
};

Report run_suite(const SuiteConfig& cfg, std::string* dump_out = nullptr);

/// The engine property suite (dual-strategy agreement, specialization
/// commutation, parser round-trip) shared by run_suite and the tests.
std::vector<CheckResult> engine_properties(uint64_t seed, int words, int maxlen);

/// Classical-degeneration checks at s = 1 for one named algebra.
std::vector<CheckResult> classical_degeneration(const std::string& which);

}  // namespace qgv

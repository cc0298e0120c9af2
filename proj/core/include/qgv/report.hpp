#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qgv {

enum class CheckStatus : uint8_t { Pass, Fail, Exploratory };

struct CheckResult {
  std::string id;        // stable identifier, e.g. "tensor/hecke"
  std::string relation;  // stable tag for the relation family being checked
  CheckStatus status = CheckStatus::Pass;
  std::string residual;  // canonical text of the nonzero remainder, empty iff pass
  double ms = 0.0;

  bool ok() const { return status != CheckStatus::Fail; }
};

struct Report {
  std::string suite;
  std::string q_mode;  // "generic" or "s=<rational>"
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (c.status == CheckStatus::Fail) return false;
    }
    return true;
  }
  void append(std::vector<CheckResult> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  }
};

enum class ReportFormat : uint8_t { Json, Text, Tap };

std::string emit_report(const Report& report, ReportFormat format);

/// Helper used by the verify_* implementations: record one exact zero check.
CheckResult make_zero_check(const std::string& id, const std::string& relation,
                            bool is_zero, const std::string& residual_text,
                            double ms = 0.0);

}  // namespace qgv

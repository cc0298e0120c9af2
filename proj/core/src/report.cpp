#include "qgv/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qgv {

namespace {

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Exploratory:
      return "exploratory";
  }
  return "?";
}

}  // namespace

CheckResult make_zero_check(const std::string& id, const std::string& relation, bool is_zero,
                            const std::string& residual_text, double ms) {
  CheckResult c;
  c.id = id;
  c.relation = relation;
  c.status = is_zero ? CheckStatus::Pass : CheckStatus::Fail;
  if (!is_zero) c.residual = residual_text;
  c.ms = ms;
  return c;
}

std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["q"] = report.q_mode;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      nlohmann::ordered_json jc;
      jc["id"] = c.id;
      jc["paper_eq"] = c.relation;
      jc["status"] = status_str(c.status);
      jc["residual"] = c.residual;
      jc["ms"] = c.ms;
      j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
  }
  if (format == ReportFormat::Tap) {
    std::ostringstream os;
    os << "1.." << report.checks.size() << "\n";
    size_t n = 0;
    for (const auto& c : report.checks) {
      ++n;
      if (c.status == CheckStatus::Fail) {
        os << "not ok " << n << " - " << c.id << "\n";
      } else if (c.status == CheckStatus::Exploratory) {
        os << "ok " << n << " - " << c.id << " # exploratory\n";
      } else {
        os << "ok " << n << " - " << c.id << "\n";
      }
    }
    return os.str();
  }
  std::ostringstream os;
  os << "suite " << report.suite << " (q: " << report.q_mode << ")\n";
  for (const auto& c : report.checks) {
    const char* tag = c.status == CheckStatus::Pass
                          ? "PASS"
                          : (c.status == CheckStatus::Fail ? "FAIL" : "INFO");
    os << "[" << tag << "] " << c.id << " (" << c.ms << " ms)";
    if (!c.residual.empty()) os << "\n       " << c.residual;
    os << "\n";
  }
  os << (report.all_pass() ? "all checks passed\n" : "FAILURES present\n");
  return os.str();
}

}  // namespace qgv

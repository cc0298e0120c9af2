// Acceptance suite: exact symbolic verification, one pass/fail line per
// criterion.  Every tolerance is an exact zero; runtime budgets are checked
// against the stated limits.

#include "qgv/espace.hpp"
#include "qgv/hspace.hpp"
#include "qgv/parser.hpp"
#include "qgv/qgauge.hpp"
#include "qgv/qsphere.hpp"
#include "qgv/qtensor.hpp"
#include "qgv/suites.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

using namespace qgv;

namespace {

struct Criterion {
  std::string id;
  std::string summary;
  double budget_ms;
  std::function<bool(std::string&)> run;
};

bool all_ok(const std::vector<CheckResult>& cs, std::string& why) {
  for (const auto& c : cs) {
    if (c.status == CheckStatus::Fail) {
      why = c.id + ": " + c.residual;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"C1", "constant tensor identities over generic s", 1000.0,
                      [](std::string& why) { return all_ok(verify_tensor_suite(), why); }});

  criteria.push_back(
      {"C2", "local confluence of the sphere, Euclidean and harmonic-space rule sets", 30000.0,
       [](std::string& why) {
         for (const char* which : {"sphere", "espace", "hspace"}) {
           ConfluenceReport rep;
           if (std::string(which) == "sphere") {
             rep = build_sphere().alg->check_local_confluence();
           } else if (std::string(which) == "espace") {
             rep = build_espace().alg->check_local_confluence();
           } else {
             rep = build_hspace().alg->check_local_confluence();
           }
           if (!rep.confluent()) {
             why = std::string(which) + ": " + rep.issues.front().detail;
             return false;
           }
         }
         return true;
       }});

  criteria.push_back({"C3", "sphere calculus: bilinears, nilpotency, structure equations",
                      120000.0, [](std::string& why) {
                        SphereAlgebra sph = build_sphere();
                        auto a = verify_sphere_relations(sph);
                        auto b = verify_maurer_cartan(sph, 4);
                        a.insert(a.end(), b.begin(), b.end());
                        return all_ok(a, why);
                      }});

  criteria.push_back({"C4", "deformed Lie algebra on monomials of degree <= 4", 120000.0,
                      [](std::string& why) {
                        SphereAlgebra sph = build_sphere();
                        return all_ok(verify_lie_algebra(sph, 4), why);
                      }});

  criteria.push_back({"C5", "Euclidean space: calculus, interval, involution, trace form",
                      60000.0, [](std::string& why) {
                        EuclideanAlgebra es = build_espace();
                        return all_ok(verify_espace(es), why);
                      }});

  criteria.push_back(
      {"C6", "instanton curvature is anti-self-dual and q-traceless (generic, s=2, s=3)",
       600000.0, [](std::string& why) {
         for (auto s0 : std::vector<std::optional<Rational>>{std::nullopt, Rational(2),
                                                             Rational(3)}) {
           GaugeAlgebra ga = build_qgauge(s0);
           if (!all_ok(verify_instanton(ga), why)) return false;
         }
         return true;
       }});

  criteria.push_back(
      {"C7", "classical limit: rules degenerate, R is the flip, the instanton stays ASD",
       60000.0, [](std::string& why) {
         for (const char* which : {"sphere", "espace", "gauge", "hspace"}) {
           if (!all_ok(classical_degeneration(which), why)) return false;
         }
         // R at s=1 is the permutation matrix.
         for (int i = 1; i <= 2; ++i)
           for (int k = 1; k <= 2; ++k)
             for (int l = 1; l <= 2; ++l)
               for (int m = 1; m <= 2; ++m) {
                 const Rational v = r_matrix(i, k, l, m).evaluate(Rational(1));
                 const Rational expect((i == m && k == l) ? 1 : 0);
                 if (v != expect) {
                   why = "R at s=1 is not the flip";
                   return false;
                 }
               }
         GaugeAlgebra ga = build_qgauge(Rational(1));
         return all_ok(verify_instanton(ga), why);
       }});

  criteria.push_back(
      {"C8", "harmonic space: split nilpotency, analyticity, zero curvature", 600000.0,
       [](std::string& why) {
         HarmonicSpace hs = build_hspace();
         auto a = verify_nilpotency(hs, 3);
         auto b = verify_analyticity(hs, 3);
         a.insert(a.end(), b.begin(), b.end());
         auto c = check_zero_curvature(hs, instanton_a1(hs));
         a.insert(a.end(), c.begin(), c.end());
         if (!all_ok(a, why)) return false;
         // d2^2 vanishes identically at s=1
         HarmonicSpace cl = build_hspace(Rational(1));
         return all_ok(verify_nilpotency(cl, 2), why);
       }});

  criteria.push_back({"C9", "engine: dual-strategy agreement, specialization, parser round-trip",
                      60000.0, [](std::string& why) {
                        return all_ok(engine_properties(1, 1000, 8), why);
                      }});

  bool all_pass = true;
  for (auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    const double ms = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count() /
                      1000.0;
    const bool in_budget = ms <= c.budget_ms;
    const bool pass = ok && in_budget;
    all_pass = all_pass && pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.summary << " (" << ms
              << " ms, budget " << c.budget_ms << " ms)";
    if (!ok) std::cout << "\n       " << why;
    if (ok && !in_budget) std::cout << "\n       exceeded the runtime budget";
    std::cout << "\n";
  }
  std::cout << (all_pass ? "ACCEPTANCE: all criteria pass\n"
                         : "ACCEPTANCE: failures present\n");
  return all_pass ? 0 : 1;
}

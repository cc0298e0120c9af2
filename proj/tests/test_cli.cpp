#include <doctest.h>

#include "qgv/espace.hpp"
#include "qgv/hspace.hpp"
#include "qgv/parser.hpp"
#include "qgv/qsphere.hpp"
#include "qgv/suites.hpp"

#include <json.hpp>

using namespace qgv;

TEST_CASE("grammar basics") {
  SphereAlgebra sph = build_sphere();
  ExprContext ctx{sph.alg.get(), default_resolver(sph.alg)};
  NCPoly p = parse_expr(ctx, "u(1,+) * u(2,+)");
  CHECK(p == sph.upoly(1, +1) * sph.upoly(2, +1));
  NCPoly z = sph.alg->normal_form(parse_expr(ctx, "q*t(0) - s^2*t(0)"));
  CHECK(z.is_zero());
  CHECK_THROWS_AS(parse_expr(ctx, "u(3,+)"), ParseError);
  CHECK_THROWS_AS(parse_expr(ctx, "u(1,+) +"), ParseError);
  // rationals, powers, parentheses, division by scalars
  NCPoly r = parse_expr(ctx, "(1/2)*u(1,+)^2 - u(1,+)*u(1,+)/2");
  CHECK(r.is_zero());
}

TEST_CASE("abbreviations expand in the harmonic algebras") {
  SphereAlgebra sph = build_sphere();
  ExprContext ctx{sph.alg.get(), default_resolver(sph.alg)};
  NCPoly ub = parse_expr(ctx, "ub(+,1)");
  CHECK(ub == sph.ubar(+1, 1));
  HarmonicSpace hs = build_hspace();
  ExprContext hctx{hs.alg.get(), default_resolver(hs.alg)};
  CHECK(parse_expr(hctx, "xp(1,+)") == hs.x_charged(1, +1));
  CHECK(parse_expr(hctx, "k(2,-)") == hs.kappa(2, -1));
  CHECK(parse_expr(hctx, "d(1,2)") == hs.delpoly(1, 2));
}

TEST_CASE("round trip on canonical output") {
  EuclideanAlgebra es = build_espace();
  ExprContext ctx{es.alg.get(), default_resolver(es.alg)};
  NCPoly p = es.alg->normal_form(es.xpoly(2, 2) * es.xpoly(1, 1) * es.taupoly());
  const std::string r = print_ncpoly(p);
  CHECK(print_ncpoly(parse_expr(ctx, r)) == r);
}

TEST_CASE("report formats") {
  SuiteConfig cfg;
  cfg.suite = "tensor";
  Report rep = run_suite(cfg);
  CHECK(rep.all_pass());

  // JSON parses and has the schema fields
  const std::string js = emit_report(rep, ReportFormat::Json);
  auto j = nlohmann::json::parse(js);
  CHECK(j["suite"] == "tensor");
  CHECK(j["q"] == "generic");
  REQUIRE(j["checks"].is_array());
  CHECK(!j["checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("paper_eq"));
    CHECK(c.contains("status"));
    CHECK(c.contains("residual"));
    CHECK(c.contains("ms"));
  }
  // TAP line count = checks + plan
  const std::string tap = emit_report(rep, ReportFormat::Tap);
  size_t lines = 0;
  for (char ch : tap)
    if (ch == '\n') ++lines;
  CHECK(lines == rep.checks.size() + 1);
  // failure carries a residual
  SuiteConfig bad = cfg;
  bad.inject_fault = "tensor";
  Report rep2 = run_suite(bad);
  CHECK(!rep2.all_pass());
  bool saw_residual = false;
  for (const auto& c : rep2.checks)
    if (c.status == CheckStatus::Fail && !c.residual.empty()) saw_residual = true;
  CHECK(saw_residual);
}

TEST_CASE("determinism: identical config and seed give identical JSON") {
  SuiteConfig cfg;
  cfg.suite = "tensor";
  cfg.seed = 9;
  auto strip_ms = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    for (auto& c : j["checks"]) c.erase("ms");
    return j.dump();
  };
  const std::string a = strip_ms(emit_report(run_suite(cfg), ReportFormat::Json));
  const std::string b = strip_ms(emit_report(run_suite(cfg), ReportFormat::Json));
  CHECK(a == b);
}

TEST_CASE("config validation") {
  SuiteConfig cfg;
  cfg.suite = "nosuch";
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  SuiteConfig cfg2;
  cfg2.s0 = Rational(0);
  CHECK_THROWS_AS(cfg2.validate(), std::invalid_argument);
  SuiteConfig cfg3;
  cfg3.max_deg = 0;
  CHECK_THROWS_AS(cfg3.validate(), std::invalid_argument);
}

TEST_CASE("engine properties") {
  auto results = engine_properties(11, 200, 6);
  for (const auto& c : results) {
    INFO(c.id, ": ", c.residual);
    CHECK(c.status != CheckStatus::Fail);
  }
}

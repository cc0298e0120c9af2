#include <doctest.h>

#include "qgv/qgauge.hpp"

using namespace qgv;

namespace {
void expect_all_pass(const std::vector<CheckResult>& results) {
  for (const auto& c : results) {
    INFO(c.id, ": ", c.residual);
    CHECK(c.status != CheckStatus::Fail);
  }
}
}  // namespace

TEST_CASE("instanton connection shape") {
  GaugeAlgebra ga = build_qgauge();
  GaugeForm A = build_instanton(ga);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(!A.e[a][b].is_zero());
      CHECK(*A.e[a][b].grade() == 1);
      for (const auto& [w, c] : A.e[a][b].terms()) {
        int ndx = 0, nx = 0, ng = 0;
        for (GenId g : w) {
          const auto& gi = ga.alg->gen(g);
          if (gi.cls == "dx") ++ndx;
          if (gi.cls == "x") ++nx;
          if (gi.cls == "g") ++ng;
        }
        CHECK(ndx == 1);
        CHECK(nx == 1);
        CHECK(ng == 1);
      }
    }
}

TEST_CASE("gauge plumbing suite") {
  GaugeAlgebra ga = build_qgauge();
  expect_all_pass(verify_gauge(ga));
}

TEST_CASE("pure gauge of the scalar c + tau is flat") {
  GaugeAlgebra ga = build_qgauge();
  const Algebra& A = *ga.alg;
  NCPoly dtau = ga.d.apply(NCPoly::gen(A, ga.tau()));
  NCPoly w = A.normal_form(dtau * NCPoly::gen(A, ga.g(0)));
  GaugeForm P;
  P.degree = 1;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) P.e[a][b] = (a == b) ? w : NCPoly(&A);
  GaugeForm F = curvature(ga, P);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      INFO(F.e[a][b].str());
      CHECK(F.e[a][b].is_zero());
    }
}

TEST_CASE("two-form components of a basis monomial") {
  GaugeAlgebra ga = build_qgauge();
  const Algebra& A = *ga.alg;
  NCPoly m = ga.dxpoly(1, 1) * ga.dxpoly(2, 2);
  TwoFormComponents tc = two_form_components(ga, m);
  CHECK(!tc.comps.empty());
  // reassembling the canonical family gives back the monomial
  NCPoly rebuilt(&A);
  for (const auto& [key, t] : tc.comps) {
    rebuilt += (ga.dxpoly(key[0], key[2]) * ga.dxpoly(key[1], key[3])) * QScalar(1) * t;
  }
  CHECK(A.normal_form(rebuilt - m).is_zero());
}

TEST_CASE("components against a Leibniz hand expansion") {
  GaugeAlgebra ga = build_qgauge();
  const Algebra& A = *ga.alg;
  // d(x dx) = dx dx for any pair of letters
  NCPoly p = ga.xpoly(1, 1) * ga.dxpoly(2, 2);
  NCPoly dp = ga.d.apply(p);
  NCPoly expect = A.normal_form(ga.dxpoly(1, 1) * ga.dxpoly(2, 2));
  CHECK(A.normal_form(dp - expect).is_zero());
  TwoFormComponents a = two_form_components(ga, dp);
  TwoFormComponents b = two_form_components(ga, expect);
  CHECK(a.comps == b.comps);
}

TEST_CASE("classical antisymmetry of two-form components") {
  GaugeAlgebra ga = build_qgauge(Rational(1));
  TwoFormComponents tc = two_form_components(ga, ga.dxpoly(1, 1) * ga.dxpoly(2, 2));
  for (const auto& [key, t] : tc.comps) {
    auto sw = tc.comps.find({key[1], key[0], key[3], key[2]});
    REQUIRE(sw != tc.comps.end());
    CHECK(ga.alg->normal_form(t + sw->second).is_zero());
  }
}

TEST_CASE("flagship: the instanton curvature is anti-self-dual") {
  GaugeAlgebra ga = build_qgauge();
  expect_all_pass(verify_instanton(ga));
}

TEST_CASE("instanton verdict is stable under specialization") {
  for (int s0 : {2, 3}) {
    GaugeAlgebra ga = build_qgauge(Rational(s0));
    expect_all_pass(verify_instanton(ga));
  }
}

TEST_CASE("classical BPST limit passes the same checks") {
  GaugeAlgebra ga = build_qgauge(Rational(1));
  expect_all_pass(verify_instanton(ga));
}

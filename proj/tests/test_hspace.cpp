#include <doctest.h>

#include "qgv/hspace.hpp"

using namespace qgv;

namespace {
void expect_all_pass(const std::vector<CheckResult>& results) {
  for (const auto& c : results) {
    INFO(c.id, ": ", c.residual);
    CHECK(c.status != CheckStatus::Fail);
  }
}
}  // namespace

TEST_CASE("mixed relations") {
  HarmonicSpace hs = build_hspace();
  expect_all_pass(verify_hspace_relations(hs));
}

TEST_CASE("analytic one-forms") {
  HarmonicSpace hs = build_hspace();
  expect_all_pass(verify_kappa(hs));
}

TEST_CASE("derivative split") {
  HarmonicSpace hs = build_hspace();
  expect_all_pass(verify_split_d(hs));
}

TEST_CASE("nilpotency of the split at generic s") {
  HarmonicSpace hs = build_hspace();
  expect_all_pass(verify_nilpotency(hs, 2));
}

TEST_CASE("classical limit kills the d2 square") {
  HarmonicSpace hs = build_hspace(Rational(1));
  expect_all_pass(verify_nilpotency(hs, 2));
}

TEST_CASE("analyticity preservation") {
  HarmonicSpace hs = build_hspace();
  expect_all_pass(verify_analyticity(hs, 2));
}

TEST_CASE("zero curvature for the instanton sector") {
  HarmonicSpace hs = build_hspace();
  HsGaugeForm a1 = instanton_a1(hs);
  expect_all_pass(check_zero_curvature(hs, a1));
  // trivial connection passes
  HsGaugeForm zero;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) zero.e[i][j] = NCPoly(hs.alg.get());
  expect_all_pass(check_zero_curvature(hs, zero));
  // a generic analytic one-form fails
  HsGaugeForm bad;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      bad.e[i][j] = hs.alg->normal_form(hs.kappa(1, -1) * hs.x_charged(2, +1));
  auto r = check_zero_curvature(hs, bad);
  CHECK(r.front().status == CheckStatus::Fail);
}

TEST_CASE("integrability contraction") {
  HarmonicSpace hs = build_hspace();
  GaugeAlgebra ga = build_qgauge();
  expect_all_pass(qgsde_integrability(hs, ga));
}

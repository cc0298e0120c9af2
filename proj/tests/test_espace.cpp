#include <doctest.h>

#include "qgv/espace.hpp"

using namespace qgv;

namespace {
void expect_all_pass(const std::vector<CheckResult>& results) {
  for (const auto& c : results) {
    INFO(c.id, ": ", c.residual);
    CHECK(c.status != CheckStatus::Fail);
  }
}
}  // namespace

TEST_CASE("full Euclidean suite at generic s") {
  EuclideanAlgebra es = build_espace();
  expect_all_pass(verify_espace(es));
}

TEST_CASE("interval expansion equals the atomic generator") {
  EuclideanAlgebra es = build_espace();
  const Algebra& A = *es.alg;
  CHECK(tau_poly(es) == es.taupoly());
  // ad - q bc closed form
  NCPoly expect = es.xpoly(1, 1) * es.xpoly(2, 2) -
                  es.xpoly(1, 2) * es.xpoly(2, 1) * QScalar::q_power(1);
  CHECK(A.normal_form(expect - es.tau_quadratic()).is_zero());
}

TEST_CASE("classical limit: coordinates commute, differentials anticommute") {
  EuclideanAlgebra es = build_espace(Rational(1));
  const Algebra& A = *es.alg;
  CHECK(A.normal_form(es.xpoly(2, 1) * es.xpoly(1, 2) - es.xpoly(1, 2) * es.xpoly(2, 1))
            .is_zero());
  CHECK(A.normal_form(es.dxpoly(2, 1) * es.dxpoly(1, 2) + es.dxpoly(1, 2) * es.dxpoly(2, 1))
            .is_zero());
  CHECK(A.normal_form(es.dxpoly(1, 1) * es.dxpoly(1, 1)).is_zero());
  // tau becomes the classical 2x2 determinant-type quadratic
  NCPoly cl = es.xpoly(1, 1) * es.xpoly(2, 2) - es.xpoly(1, 2) * es.xpoly(2, 1);
  CHECK(A.normal_form(cl - es.tau_quadratic()).is_zero());
}

TEST_CASE("involution is defined only on the coordinate sector") {
  EuclideanAlgebra es = build_espace();
  CHECK_THROWS_AS(espace_conj(es, es.dxpoly(1, 1)), std::invalid_argument);
}

TEST_CASE("suite passes at s = 2") {
  EuclideanAlgebra es = build_espace(Rational(2));
  expect_all_pass(verify_espace(es));
}

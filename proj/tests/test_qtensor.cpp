#include <doctest.h>

#include "qgv/qtensor.hpp"

using namespace qgv;

TEST_CASE("epsilon values under the fixed convention") {
  CHECK(epsilon_lower(1, 2) == QScalar::s_power(1));
  CHECK(epsilon_lower(2, 1) == -QScalar::s_power(-1));
  CHECK(epsilon_lower(1, 1).is_zero());
  CHECK(epsilon_lower(2, 2).is_zero());
  CHECK(epsilon_upper(2, 1) == QScalar::s_power(-1));
  CHECK(epsilon_upper(1, 2) == -QScalar::s_power(1));
  // antisymmetry with the q(ik) factor: eps_{ik} = -q(ik) eps_{ki}
  CHECK(epsilon_lower(1, 2) == -QScalar::q_power(1) * epsilon_lower(2, 1));
}

TEST_CASE("R-matrix entries") {
  CHECK(r_matrix(1, 1, 1, 1) == QScalar::q_power(1));
  CHECK(r_matrix(1, 2, 1, 2) == QScalar::lambda());
  CHECK(r_matrix(2, 1, 1, 2) == QScalar(1));
  CHECK(r_matrix(1, 2, 2, 1) == QScalar(1));
  CHECK(r_matrix(2, 1, 2, 1).is_zero());
  CHECK(r_matrix(2, 2, 2, 2) == QScalar::q_power(1));
}

TEST_CASE("projector values and the classical antisymmetrizer") {
  SpinorTensor pm = projector(-1);
  // P-^{12}_{12} = -eps^{21} eps_{21} / (q + 1/q) = 1/(1+q^2)
  CHECK(pm.at({1, 2, 1, 2}) == QScalar(1) / (QScalar(1) + QScalar::q_power(2)));
  SpinorTensor cl = pm.specialized(Rational(1));
  CHECK(cl.at({1, 2, 1, 2}) == QScalar(Rational(1, 2)));
  CHECK(cl.at({1, 2, 2, 1}) == QScalar(Rational(-1, 2)));
  CHECK(cl.at({1, 1, 1, 1}).is_zero());
  // completeness
  SpinorTensor pp = projector(+1);
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l)
        for (int m = 1; m <= 2; ++m) {
          QScalar v = pp.at({i, k, l, m}) + pm.at({i, k, l, m});
          if (i == l && k == m) v -= QScalar(1);
          CHECK(v.is_zero());
        }
}

TEST_CASE("metric is diagonal (1/q, q)") {
  SpinorTensor D = metric();
  CHECK(D.at({1, 1}) == QScalar::q_power(-1));
  CHECK(D.at({2, 2}) == QScalar::q_power(1));
  CHECK(D.at({1, 2}).is_zero());
  SpinorTensor Di = metric_inv();
  CHECK(Di.at({1, 1}) == QScalar::q_power(1));
  CHECK(Di.at({2, 2}) == QScalar::q_power(-1));
}

TEST_CASE("identity suite passes over generic s") {
  auto results = verify_tensor_suite();
  for (const auto& c : results) {
    INFO(c.id, ": ", c.residual);
    CHECK(c.status == CheckStatus::Pass);
  }
}

TEST_CASE("identity suite passes at s = 3") {
  auto results = verify_tensor_suite(Rational(3));
  for (const auto& c : results) {
    INFO(c.id, ": ", c.residual);
    CHECK(c.status == CheckStatus::Pass);
  }
}

TEST_CASE("corrupted R entry fails a named identity") {
  auto results = verify_tensor_suite(std::nullopt, true);
  bool hecke_failed = false;
  for (const auto& c : results) {
    if (c.id == "tensor/hecke" && c.status == CheckStatus::Fail) hecke_failed = true;
  }
  CHECK(hecke_failed);
}

TEST_CASE("tensors render as JSON index/value arrays") {
  SpinorTensor D = metric();
  const std::string j = D.json();
  CHECK(j.find("\"indices\":[1,1]") != std::string::npos);
  CHECK(j.find("\"value\":") != std::string::npos);
}

TEST_CASE("unset entries read as exact zero and bad indices throw") {
  SpinorTensor t(2);
  CHECK(t.at({1, 2}).is_zero());
  CHECK_THROWS_AS(t.at({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(t.at({1}), std::invalid_argument);
}

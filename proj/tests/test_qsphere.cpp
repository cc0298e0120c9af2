#include <doctest.h>

#include "qgv/qsphere.hpp"

using namespace qgv;

namespace {
void expect_all_pass(const std::vector<CheckResult>& results) {
  for (const auto& c : results) {
    INFO(c.id, ": ", c.residual);
    CHECK(c.status != CheckStatus::Fail);
  }
}
}  // namespace

TEST_CASE("harmonic bilinear relations reduce to zero") {
  SphereAlgebra sph = build_sphere();
  expect_all_pass(verify_sphere_relations(sph));
}

TEST_CASE("inverse harmonics as explicit polynomials") {
  SphereAlgebra sph = build_sphere();
  CHECK(sph.ubar(+1, 1) == sph.upoly(2, -1));
  CHECK(sph.ubar(+1, 2) == sph.upoly(1, -1) * (-QScalar::q_power(-1)));
  CHECK(sph.ubar(-1, 1) == sph.upoly(2, +1) * (-QScalar::q_power(1)));
  CHECK(sph.ubar(-1, 2) == sph.upoly(1, +1));
}

TEST_CASE("invariant operator actions on harmonics") {
  SphereAlgebra sph = build_sphere();
  const Algebra& A = *sph.alg;
  for (int i = 1; i <= 2; ++i) {
    ThetaProjection t = d_operators(sph, sph.upoly(i, +1));
    CHECK(t.c0 == sph.upoly(i, +1) * QScalar::q_power(2));
    CHECK(t.cP2.is_zero());
    CHECK(t.cM2 == sph.upoly(i, -1) * QScalar::q_power(-1));
    ThetaProjection tm = d_operators(sph, sph.upoly(i, -1));
    CHECK(tm.c0 == sph.upoly(i, -1) * QScalar(-1));
    CHECK(tm.cP2 == sph.upoly(i, +1) * QScalar::q_power(1));
    CHECK(tm.cM2.is_zero());
  }
  // neutral monomials are annihilated by D0
  ThetaProjection tz = d_operators(sph, A.normal_form(sph.upoly(1, +1) * sph.upoly(1, -1)));
  CHECK(tz.c0.is_zero());
  // charge-2 eigenvalue q^2 (1+q^2)
  NCPoly f = A.normal_form(sph.upoly(1, +1) * sph.upoly(2, +1));
  ThetaProjection t2 = d_operators(sph, f);
  CHECK(t2.c0 == f * (QScalar::q_power(2) * (QScalar(1) + QScalar::q_power(2))));
}

TEST_CASE("deformed Lie algebra relations hold through degree 4") {
  SphereAlgebra sph = build_sphere();
  expect_all_pass(verify_lie_algebra(sph, 2));
  expect_all_pass(verify_lie_algebra(sph, 4));
}

TEST_CASE("classical limit of the Lie relations") {
  SphereAlgebra sph = build_sphere(Rational(1));
  expect_all_pass(verify_lie_algebra(sph, 2));
}

TEST_CASE("Maurer-Cartan system and nilpotency") {
  SphereAlgebra sph = build_sphere();
  expect_all_pass(verify_maurer_cartan(sph, 4));
}

TEST_CASE("corrupted structure coefficient fails a named check") {
  SphereAlgebra sph = build_sphere();
  auto results = verify_maurer_cartan(sph, 2, true);
  bool found = false;
  for (const auto& c : results) {
    if (c.status == CheckStatus::Fail &&
        (c.id == "sphere/du-nilpotent" || c.id == "sphere/mc-thetap2")) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("irreducible harmonic polynomials are q-symmetric") {
  SphereAlgebra sph = build_sphere();
  HarmonicPolynomial p10 = build_phi(sph, 1, 0);
  CHECK(p10.components.at({1}) == sph.upoly(1, +1));
  CHECK(p10.components.at({2}) == sph.upoly(2, +1));
  CHECK(phi_is_symmetric(sph, build_phi(sph, 2, 0)));
  CHECK(phi_is_symmetric(sph, build_phi(sph, 1, 1)));
  CHECK(phi_is_symmetric(sph, build_phi(sph, 2, 1)));
}

TEST_CASE("charge bookkeeping matches the grading") {
  SphereAlgebra sph = build_sphere();
  const Algebra& A = *sph.alg;
  NCPoly w = A.normal_form(sph.upoly(1, +1) * sph.upoly(2, +1) * sph.upoly(1, -1));
  CHECK(*w.charge() == 1);
  // reduction conserves the charge on every term, so charge() stays defined
  NCPoly m = A.normal_form(sph.upoly(2, -1) * sph.upoly(1, +1));
  CHECK(*m.charge() == 0);
}

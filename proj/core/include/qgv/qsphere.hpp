#pragma once

#include "qgv/ncalg.hpp"
#include "qgv/qtensor.hpp"

#include <map>

namespace qgv {

/// The SU_q(2) harmonic algebra with its left-covariant 3D calculus:
/// generators u^i_a (grade 0, charge +-1) and the three invariant 1-forms
/// t(0), t(-2), t(+2).  du is the exterior derivative on the group.
struct SphereAlgebra {
  AlgebraPtr alg;
  GradedDerivation du;

  GenId u(int i, int a) const;      // a = +1 or -1
  GenId theta(int p) const;         // p in {0, +2, -2}
  NCPoly upoly(int i, int a) const;
  NCPoly tpoly(int p) const;
  NCPoly ubar(int a, int i) const;  // inverse harmonics, a = +1/-1
  /// theta^b_a as a matrix over the U(1) labels (+1/-1), with the q-trace
  /// eliminating theta^-_- = -q^2 t(0).
  NCPoly theta_mat(int b, int a) const;
};

SphereAlgebra build_sphere(std::optional<Rational> s0 = std::nullopt);

/// (D0 p, D+2 p, D-2 p) via the theta decomposition of du p (p of grade 0).
ThetaProjection d_operators(const SphereAlgebra& sph, const NCPoly& p);

/// The three summands of du realized on functions and on theta-leading
/// 1-forms; `which` is 0 (theta0 channel), +2 (the D_{(+2)} channel carried
/// by t(-2)) or -2 (the D_{(-2)} channel carried by t(+2)).
NCPoly delta_apply(const SphereAlgebra& sph, int which, const NCPoly& p);

struct HarmonicPolynomial {
  int r = 0, s = 0;
  std::map<std::vector<int>, NCPoly> components;  // index tuples over {1,2}
};

/// q-symmetrized harmonic monomials (u_+)^r (u_-)^s.
HarmonicPolynomial build_phi(const SphereAlgebra& sph, int r, int s);

/// P+_{k,k+1} Phi = Phi for every adjacent slot.
bool phi_is_symmetric(const SphereAlgebra& sph, const HarmonicPolynomial& phi);

std::vector<CheckResult> verify_sphere_relations(const SphereAlgebra& sph);
std::vector<CheckResult> verify_lie_algebra(const SphereAlgebra& sph, int maxdeg);
std::vector<CheckResult> verify_maurer_cartan(const SphereAlgebra& sph, int maxlen = 4,
                                              bool corrupt = false);

}  // namespace qgv

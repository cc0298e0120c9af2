#pragma once

#include "qgv/ncalg.hpp"
#include "qgv/qtensor.hpp"

namespace qgv {

/// E_q(4): coordinates x^i_alpha, differentials dx^i_alpha, the central
/// interval tau (kept atomic, with its quadratic expansion available) and the
/// formal inverse tau^{-1}.  dx is the exterior derivative.
struct EuclideanAlgebra {
  AlgebraPtr alg;
  GradedDerivation d;

  GenId x(int i, int a) const { return alg->need("x", i, a); }
  GenId dxg(int i, int a) const { return alg->need("dx", i, a); }
  GenId tau() const { return alg->need("tau"); }
  GenId tinv() const { return alg->need("tinv", 0); }

  NCPoly xpoly(int i, int a) const { return NCPoly::gen(*alg, x(i, a)); }
  NCPoly dxpoly(int i, int a) const { return NCPoly::gen(*alg, dxg(i, a)); }
  NCPoly taupoly() const { return NCPoly::gen(*alg, tau()); }
  NCPoly tinvpoly() const { return NCPoly::gen(*alg, tinv()); }

  /// The defining quadratic -q/(1+q^2) eps^{ba} eps_{ki} x^i_a x^k_b, written
  /// out (not collapsed to the atomic generator).
  NCPoly tau_quadratic() const;

  /// S(x)^a_i = eps_{il} x^l_b eps^{ba} tau^{-1}.
  NCPoly inverse_matrix(int a, int i) const;
};

EuclideanAlgebra build_espace(std::optional<Rational> s0 = std::nullopt);

/// Normal form of the defining contraction (reduces to the atomic tau).
NCPoly tau_poly(const EuclideanAlgebra& es);

/// The E_q(4) involution, extended antimultiplicatively over words of x and
/// tau generators.  Arguments containing differentials are rejected.
NCPoly espace_conj(const EuclideanAlgebra& es, const NCPoly& p);

struct OmegaXi {
  NCPoly omega[2][2];  // omega^i_k
  NCPoly xi;
};

OmegaXi omega_xi(const EuclideanAlgebra& es);

std::vector<CheckResult> verify_espace(const EuclideanAlgebra& es, uint64_t seed = 20260810);

}  // namespace qgv

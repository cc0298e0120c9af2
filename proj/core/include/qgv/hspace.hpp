#pragma once

#include "qgv/ncalg.hpp"
#include "qgv/qgauge.hpp"
#include "qgv/qtensor.hpp"

namespace qgv {

/// The deformed harmonic space: E_q(4) tensored with the harmonic sphere,
/// with derivative generators that differentiate by migrating right.  When
/// built with the instanton sector it also carries c, the atomic interval
/// tau and the inverse tower g(m) = (c + q^m tau)^{-1}.
struct HarmonicSpace {
  AlgebraPtr alg;
  GradedDerivation du;   // sphere differential (kills x, dx, derivatives)
  GradedDerivation dxt;  // E_q(4) differential as a generator table
  bool instanton_sector = false;

  GenId u(int i, int a) const { return alg->need("u", i, a); }
  GenId theta(int p) const { return alg->need("t", p); }
  GenId x(int i, int a) const { return alg->need("x", i, a); }
  GenId dxg(int i, int a) const { return alg->need("dx", i, a); }
  GenId del(int a, int i) const { return alg->need("del", a, i); }  // del^alpha_i

  NCPoly upoly(int i, int a) const { return NCPoly::gen(*alg, u(i, a)); }
  NCPoly xpoly(int i, int a) const { return NCPoly::gen(*alg, x(i, a)); }
  NCPoly dxpoly(int i, int a) const { return NCPoly::gen(*alg, dxg(i, a)); }
  NCPoly delpoly(int a, int i) const { return NCPoly::gen(*alg, del(a, i)); }
  NCPoly tpoly(int p) const { return NCPoly::gen(*alg, theta(p)); }

  NCPoly ubar(int a, int i) const;
  NCPoly theta_mat(int b, int a) const;

  /// Charged composites (the U(1) label a is +1 or -1).
  NCPoly x_charged(int alpha, int a) const;    // x_{alpha a} = eps_{ik} x^k_alpha u^i_a
  NCPoly del_charged(int alpha, int a) const;  // del^alpha_a = u^i_a del^alpha_i
  NCPoly kappa(int alpha, int a) const;        // kappa_{alpha a} = eps_{ki} dx^i_alpha u^k_a
  NCPoly kappa_up(int alpha, int a) const;     // kappa^a_alpha = eps^{ab} kappa_{alpha b}

  /// The operators d1 and d2 as left-multiplication polynomials; trailing
  /// derivative letters annihilate, so NF(op * p) applies the operator.
  NCPoly d1_op() const;
  NCPoly d2_op() const;
  NCPoly dx_op() const;
  NCPoly apply_op(const NCPoly& op, const NCPoly& p) const;

  /// delta components in the mixed algebra: the theta-channel parts of du.
  /// For theta-free input the channel is read off the (unique) leading theta
  /// of du(p).
  NCPoly delta(int which, const NCPoly& p) const;  // which in {0, +2, -2}
};

HarmonicSpace build_hspace(std::optional<Rational> s0 = std::nullopt,
                           bool instanton_sector = true, int span = 8);

std::vector<CheckResult> verify_hspace_relations(const HarmonicSpace& hs);
std::vector<CheckResult> verify_kappa(const HarmonicSpace& hs);
std::vector<CheckResult> verify_split_d(const HarmonicSpace& hs);
std::vector<CheckResult> verify_nilpotency(const HarmonicSpace& hs, int maxlen);
std::vector<CheckResult> verify_analyticity(const HarmonicSpace& hs, int maxdeg = 3);

/// kappa^+-sector component of the instanton connection, written in the
/// harmonic-space variables with the translation invariance used at zero
/// shift parameters.
struct HsGaugeForm {
  NCPoly e[2][2];
};
HsGaugeForm instanton_a1(const HarmonicSpace& hs);
HsGaugeForm instanton_connection(const HarmonicSpace& hs);

/// Zero-curvature test d1 a1 - a1^2 = 0.  Errors if a1 has a kappa^-
/// component (i.e. is not in the analytic sector).
std::vector<CheckResult> check_zero_curvature(const HarmonicSpace& hs, const HsGaugeForm& a1);

std::vector<CheckResult> qgsde_integrability(const HarmonicSpace& hs, const GaugeAlgebra& ga);

}  // namespace qgv

#pragma once

#include "qgv/ncalg.hpp"
#include "qgv/qtensor.hpp"

#include <map>

namespace qgv {

/// Extended Euclidean algebra for the gauge sector: shifted coordinates
/// x^k_b (same exchange relations as the plain coordinates), differentials,
/// the central scalar parameter c, the atomic interval tau, and the tower
/// g(m) = (c + q^m tau)^{-1}.
struct GaugeAlgebra {
  AlgebraPtr alg;
  GradedDerivation d;
  int span = 0;

  GenId x(int i, int a) const { return alg->need("x", i, a); }
  GenId dxg(int i, int a) const { return alg->need("dx", i, a); }
  GenId c() const { return alg->need("c"); }
  GenId tau() const { return alg->need("tau"); }
  GenId g(int m) const { return alg->need("g", m); }

  NCPoly xpoly(int i, int a) const { return NCPoly::gen(*alg, x(i, a)); }
  NCPoly dxpoly(int i, int a) const { return NCPoly::gen(*alg, dxg(i, a)); }
};

GaugeAlgebra build_qgauge(std::optional<Rational> s0 = std::nullopt, int span = 8);

/// Gauge-index matrix of forms; entries reduced.
struct GaugeForm {
  int degree = 0;
  NCPoly e[2][2];  // gauge labels +,- mapped to 1,2
};

/// The 5-parameter anti-self-dual connection:
/// A^a_b = dx^a_alpha eps_{bk} x^k_beta eps^{beta alpha} (c + tau)^{-1}.
GaugeForm build_instanton(const GaugeAlgebra& ga);

/// F = dA - A^2.
GaugeForm curvature(const GaugeAlgebra& ga, const GaugeForm& A);

/// Canonical component family of a 2-form in the dx^i_alpha dx^k_beta basis:
/// the unique lift into the -1 eigenspace of the pair exchange operator.
struct TwoFormComponents {
  // key = (i, k, alpha, beta); right coefficient of dx^i_alpha dx^k_beta
  std::map<std::array<int, 4>, NCPoly> comps;
};

TwoFormComponents two_form_components(const GaugeAlgebra& ga, const NCPoly& two_form);

struct AsdResult {
  std::vector<CheckResult> checks;
  // singlet field strength F^{beta alpha} per gauge entry, when ASD holds
  std::map<std::array<int, 4>, NCPoly> singlet;  // (a, b, alpha, beta)
  bool passed = false;
};

AsdResult check_anti_self_dual(const GaugeAlgebra& ga, const GaugeForm& F);

std::vector<CheckResult> check_traces(const GaugeAlgebra& ga, const GaugeForm& A,
                                      const GaugeForm& F);

/// The homogeneous exchange candidate A R A + R A R A R; the residual is
/// reported, never asserted.
CheckResult exploratory_connection_exchange(const GaugeAlgebra& ga, const GaugeForm& A);

/// Resolution of the identity on the sixteen basic 2-forms.
std::vector<CheckResult> verify_two_form_resolution(const GaugeAlgebra& ga);

/// Trace of a gauge matrix with the metric weights (1/q, q).
NCPoly q_trace(const GaugeAlgebra& ga, const GaugeForm& M);

std::vector<CheckResult> verify_gauge(const GaugeAlgebra& ga, uint64_t seed = 20260810);
std::vector<CheckResult> verify_instanton(const GaugeAlgebra& ga, bool dump_components = false,
                                          std::string* dump_out = nullptr);

}  // namespace qgv

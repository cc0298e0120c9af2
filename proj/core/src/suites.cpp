#include "qgv/suites.hpp"

#include "qgv/espace.hpp"
#include "qgv/hspace.hpp"
#include "qgv/ncalg.hpp"
#include "qgv/parser.hpp"
#include "qgv/qgauge.hpp"
#include "qgv/qsphere.hpp"
#include "qgv/qtensor.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace qgv {

void SuiteConfig::validate() const {
  static const std::set<std::string> known{"tensor",    "sphere", "espace", "gauge",
                                           "instanton", "hspace", "engine", "all"};
  if (!known.count(suite)) throw std::invalid_argument("unknown suite: " + suite);
  if (max_deg <= 0 || max_len <= 0) throw std::invalid_argument("bounds must be positive");
  if (s0 && *s0 == 0) throw std::invalid_argument("specialization must be nonzero");
}

namespace {

using Clock = std::chrono::steady_clock;

void timed(Report& rep, const std::function<std::vector<CheckResult>()>& f) {
  const auto t0 = Clock::now();
  std::vector<CheckResult> cs = f();
  const double ms =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count() / 1000.0;
  for (auto& c : cs) {
    if (c.ms == 0.0) c.ms = ms;
    rep.checks.push_back(std::move(c));
  }
}

CheckResult confluence_check(const std::string& id, const Algebra& alg) {
  CheckResult c;
  c.id = id;
  c.relation = "local-confluence";
  ConfluenceReport r = alg.check_local_confluence();
  if (r.confluent()) {
    c.status = CheckStatus::Pass;
  } else {
    c.status = CheckStatus::Fail;
    c.residual = r.issues.front().detail + " (" + std::to_string(r.issues.size()) + " issues, " +
                 std::to_string(r.critical_pairs) + " critical pairs)";
  }
  return c;
}

std::vector<CheckResult> sphere_suite(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  SphereAlgebra sph = build_sphere(cfg.s0);
  const bool corrupt = cfg.inject_fault == "sphere";
  auto add = [&out](std::vector<CheckResult> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  add(verify_sphere_relations(sph));
  add(verify_maurer_cartan(sph, 4, corrupt));
  add(verify_lie_algebra(sph, cfg.max_deg));
  out.push_back(confluence_check("sphere/confluence", *sph.alg));
  {
    CheckResult c;
    c.id = "sphere/phi-symmetric";
    c.relation = "harmonic-polynomials";
    bool ok = true;
    for (auto [r, s] : {std::pair<int, int>{1, 0}, {2, 0}, {1, 1}}) {
      HarmonicPolynomial phi = build_phi(sph, r, s);
      if (!phi_is_symmetric(sph, phi)) {
        ok = false;
        c.residual = "projector invariance fails for (" + std::to_string(r) + "," +
                     std::to_string(s) + ")";
        break;
      }
    }
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> espace_suite(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  EuclideanAlgebra es = build_espace(cfg.s0);
  for (auto& c : verify_espace(es, cfg.seed)) out.push_back(std::move(c));
  out.push_back(confluence_check("espace/confluence", *es.alg));
  return out;
}

std::vector<CheckResult> hspace_suite(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  HarmonicSpace hs = build_hspace(cfg.s0);
  auto add = [&out](std::vector<CheckResult> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  add(verify_hspace_relations(hs));
  add(verify_kappa(hs));
  add(verify_split_d(hs));
  add(verify_nilpotency(hs, cfg.max_len));
  add(verify_analyticity(hs, std::min(cfg.max_deg, 3)));
  {
    // The instanton in harmonic variables: its analytic component solves the
    // zero-curvature equation; the split reassembles the connection.
    HsGaugeForm a1 = instanton_a1(hs);
    add(check_zero_curvature(hs, a1));
    const Algebra& A = *hs.alg;
    HsGaugeForm full = instanton_connection(hs);
    NCPoly worst(&A);
    for (int a = 1; a <= 2; ++a)
      for (int bb = 1; bb <= 2; ++bb) {
        // a2: the kappa_{alpha +} part
        NCPoly acc(&A);
        const GenId g0 = A.need("g", 0);
        for (int al = 1; al <= 2; ++al)
          for (int m = 1; m <= 2; ++m) {
            QScalar cam = epsilon_upper(a, m);
            if (cam.is_zero()) continue;
            NCPoly y(&A);
            for (int k = 1; k <= 2; ++k)
              for (int be = 1; be <= 2; ++be) {
                QScalar cv = epsilon_lower(bb, k) * epsilon_upper(be, al);
                if (!cv.is_zero()) y.add_term(Word{hs.x(k, be), g0}, cv);
              }
            acc += (hs.kappa(al, +1) * hs.ubar(+1, m) * y) * cam;
          }
        NCPoly diff = A.normal_form(a1.e[a - 1][bb - 1] + acc - full.e[a - 1][bb - 1]);
        if (!diff.is_zero() && worst.is_zero()) worst = diff;
      }
    CheckResult c;
    c.id = "hspace/connection-split";
    c.relation = "zero-curvature";
    c.status = worst.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
    if (!worst.is_zero()) c.residual = worst.str();
    out.push_back(std::move(c));
    // Negative control: a generic kappa^+-sector 1-form is not flat.
    HsGaugeForm bad;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        bad.e[i][j] = A.normal_form(hs.kappa(1, -1) * hs.x_charged(2, +1));
    auto neg = check_zero_curvature(hs, bad);
    CheckResult nc;
    nc.id = "hspace/zero-curvature-negative";
    nc.relation = "zero-curvature";
    nc.status = (!neg.empty() && neg.front().status == CheckStatus::Fail) ? CheckStatus::Pass
                                                                          : CheckStatus::Fail;
    if (nc.status == CheckStatus::Fail) nc.residual = "generic analytic form reported flat";
    out.push_back(std::move(nc));
  }
  {
    GaugeAlgebra ga = build_qgauge(cfg.s0);
    add(qgsde_integrability(hs, ga));
  }
  out.push_back(confluence_check("hspace/confluence", *hs.alg));
  return out;
}

}  // namespace

std::vector<CheckResult> engine_properties(uint64_t seed, int words, int maxlen) {
  std::vector<CheckResult> out;

  auto agreement = [&](const std::string& id, const Algebra& alg, int count, int len) {
    CheckResult c;
    c.id = id;
    c.relation = "normal-form-agreement";
    ConfluenceReport rep = alg.random_word_agreement(count, len, seed);
    c.status = rep.confluent() ? CheckStatus::Pass : CheckStatus::Fail;
    if (!rep.confluent()) c.residual = rep.issues.front().detail;
    return c;
  };

  SphereAlgebra sph = build_sphere();
  EuclideanAlgebra es = build_espace();
  HarmonicSpace hs = build_hspace();
  out.push_back(agreement("engine/sphere-agreement", *sph.alg, words, maxlen));
  out.push_back(agreement("engine/espace-agreement", *es.alg, words, maxlen));
  out.push_back(agreement("engine/hspace-agreement", *hs.alg, words, std::min(maxlen, 6)));

  // Specialization commutes with reduction at a non-pole point.
  {
    CheckResult c;
    c.id = "engine/specialization-commutes";
    c.relation = "specialization";
    c.status = CheckStatus::Pass;
    const Rational s0(3);
    SphereAlgebra sph3 = build_sphere(s0);
    EuclideanAlgebra es3 = build_espace(s0);
    std::mt19937_64 rng(seed + 17);
    auto run_pairs = [&](const Algebra& gen_alg, const Algebra& spec_alg, int count, int len) {
      for (int t = 0; t < count && c.status == CheckStatus::Pass; ++t) {
        Word w;
        const int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(len));
        for (int j = 0; j < n; ++j)
          w.push_back(static_cast<GenId>(rng() % gen_alg.gen_count()));
        NCPoly generic_nf = gen_alg.normal_form(NCPoly::term(gen_alg, QScalar(1), w));
        NCPoly spec_nf = spec_alg.normal_form(NCPoly::term(spec_alg, QScalar(1), w));
        // specialize the generic result and compare term by term
        NCPoly lowered(&spec_alg);
        for (const auto& [tw, tc] : generic_nf.terms()) lowered.add_term(tw, tc.specialized(s0));
        if (!(lowered == spec_nf)) {
          c.status = CheckStatus::Fail;
          c.residual = "mismatch on " + gen_alg.word_str(w);
        }
      }
    };
    run_pairs(*sph.alg, *sph3.alg, 300, 6);
    run_pairs(*es.alg, *es3.alg, 300, 6);
    out.push_back(std::move(c));
  }
  // Parser round-trip on canonical outputs.
  {
    CheckResult c;
    c.id = "engine/parser-roundtrip";
    c.relation = "parser-roundtrip";
    c.status = CheckStatus::Pass;
    std::mt19937_64 rng(seed + 99);
    auto round = [&](const AlgebraPtr& alg, int count, int len) {
      ExprContext ctx{alg.get(), default_resolver(alg)};
      for (int t = 0; t < count && c.status == CheckStatus::Pass; ++t) {
        Word w;
        const int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(len));
        for (int j = 0; j < n; ++j) w.push_back(static_cast<GenId>(rng() % alg->gen_count()));
        NCPoly p = alg->normal_form(NCPoly::term(*alg, QScalar(1), w));
        const std::string r = print_ncpoly(p);
        NCPoly back = parse_expr(ctx, r);
        if (!(alg->normal_form(back) == p)) {
          c.status = CheckStatus::Fail;
          c.residual = "round-trip failed on " + r;
        }
        const std::string again = print_ncpoly(parse_expr(ctx, r));
        if (again != r && c.status == CheckStatus::Pass) {
          c.status = CheckStatus::Fail;
          c.residual = "print(parse(r)) != r for " + r;
        }
      }
    };
    round(sph.alg, 120, 5);
    round(es.alg, 120, 5);
    round(hs.alg, 120, 4);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> classical_degeneration(const std::string& which) {
  std::vector<CheckResult> out;
  const Rational one(1);
  AlgebraPtr alg;
  if (which == "sphere") {
    alg = build_sphere(one).alg;
  } else if (which == "espace") {
    alg = build_espace(one).alg;
  } else if (which == "gauge") {
    alg = build_qgauge(one).alg;
  } else if (which == "hspace") {
    alg = build_hspace(one).alg;
  } else {
    throw std::invalid_argument("classical_degeneration: unknown algebra " + which);
  }
  const Algebra& A = *alg;
  NCPoly worst(&A);
  std::string detail;
  for (const auto& r : A.rules()) {
    if (r.kind != RewriteRule::Kind::Exchange) continue;
    const auto& ga = A.gen(r.a);
    const auto& gb = A.gen(r.b);
    const int sign = (ga.grade * gb.grade) % 2 ? -1 : +1;
    NCPoly comm = NCPoly::term(A, QScalar(1), Word{r.a, r.b}) -
                  NCPoly::term(A, QScalar(sign), Word{r.b, r.a});
    NCPoly nf = A.normal_form(comm);
    // Derivative-coordinate pairs keep their classical source term.
    if (ga.cls == "del" && gb.cls == "x") {
      if (ga.idx[0] == gb.idx[1] && ga.idx[1] == gb.idx[0]) nf -= NCPoly::unit(A);
      nf = A.normal_form(nf);
    }
    if (!nf.is_zero() && worst.is_zero()) {
      worst = nf;
      detail = "pair (" + ga.name + ", " + gb.name + ")";
    }
  }
  CheckResult c;
  c.id = which + "/classical-degeneration";
  c.relation = "classical-limit";
  c.status = worst.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
  if (!worst.is_zero()) c.residual = detail + ": " + worst.str();
  out.push_back(std::move(c));
  return out;
}

Report run_suite(const SuiteConfig& cfg, std::string* dump_out) {
  cfg.validate();
  Report rep;
  rep.suite = cfg.suite;
  rep.q_mode = cfg.s0 ? ("s=" + rational_str(*cfg.s0)) : "generic";

  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "tensor") {
    timed(rep, [&] { return verify_tensor_suite(cfg.s0, cfg.inject_fault == "tensor"); });
  }
  if (all || cfg.suite == "sphere") {
    timed(rep, [&] { return sphere_suite(cfg); });
  }
  if (all || cfg.suite == "espace") {
    timed(rep, [&] { return espace_suite(cfg); });
  }
  if (all || cfg.suite == "gauge") {
    timed(rep, [&] {
      GaugeAlgebra ga = build_qgauge(cfg.s0);
      return verify_gauge(ga, cfg.seed);
    });
  }
  if (all || cfg.suite == "instanton") {
    timed(rep, [&] {
      GaugeAlgebra ga = build_qgauge(cfg.s0);
      return verify_instanton(ga, cfg.dump_F, dump_out);
    });
  }
  if (all || cfg.suite == "hspace") {
    timed(rep, [&] { return hspace_suite(cfg); });
  }
  if (all || cfg.suite == "engine") {
    timed(rep, [&] { return engine_properties(cfg.seed, 1000, 8); });
  }
  return rep;
}

}  // namespace qgv

#include "qgv/qgauge.hpp"

#include <random>
#include <sstream>

namespace qgv {

GaugeAlgebra build_qgauge(std::optional<Rational> s0, int span) {
  AlgebraBuilder b("gauge", s0);

  GenId dxid[3][3], xid[3][3];
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 2; ++a) {
      GeneratorInfo gi;
      gi.cls = "dx";
      gi.idx = {i, a};
      gi.grade = 1;
      gi.charge = 0;
      gi.weight = 1;
      gi.name = "dx(" + std::to_string(i) + "," + std::to_string(a) + ")";
      dxid[i][a] = b.add_generator(gi);
    }
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 2; ++a) {
      GeneratorInfo gi;
      gi.cls = "x";
      gi.idx = {i, a};
      gi.grade = 0;
      gi.charge = 0;
      gi.weight = 1;
      gi.name = "x(" + std::to_string(i) + "," + std::to_string(a) + ")";
      xid[i][a] = b.add_generator(gi);
    }
  // Scalars to the right of the coordinate sector, adjacent to the tower.
  GeneratorInfo gc;
  gc.cls = "c";
  gc.grade = 0;
  gc.charge = 0;
  gc.weight = 0;
  gc.name = "c";
  const GenId c = b.add_generator(gc);

  GeneratorInfo gt;
  gt.cls = "tau";
  gt.grade = 0;
  gt.charge = 0;
  gt.weight = 0;
  gt.name = "tau";
  const GenId tau = b.add_generator(gt);

  std::vector<RawRelation> rels;
  // Shifted coordinates satisfy the same exchange relations.
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int a = 1; a <= 2; ++a)
        for (int bb = 1; bb <= 2; ++bb) {
          RawRelation r;
          for (int l = 1; l <= 2; ++l)
            for (int m = 1; m <= 2; ++m) {
              QScalar cv = r_matrix(i, k, l, m);
              if (!cv.is_zero()) r.push_back({cv, Word{xid[l][a], xid[m][bb]}});
              QScalar c2 = r_matrix(l, m, a, bb);
              if (!c2.is_zero()) r.push_back({-c2, Word{xid[i][l], xid[k][m]}});
            }
          rels.push_back(std::move(r));
        }
  {
    RawRelation r;
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int a = 1; a <= 2; ++a)
          for (int bb = 1; bb <= 2; ++bb) {
            QScalar cv = epsilon_upper(bb, a) * epsilon_lower(k, i);
            cv = cv * (-QScalar::q_power(1) / (QScalar(1) + QScalar::q_power(2)));
            if (!cv.is_zero()) r.push_back({cv, Word{xid[i][a], xid[k][bb]}});
          }
    r.push_back({QScalar(-1), Word{tau}});
    rels.push_back(std::move(r));
  }
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 2; ++a) {
      rels.push_back({{QScalar(1), Word{xid[i][a], tau}}, {QScalar(-1), Word{tau, xid[i][a]}}});
      rels.push_back(
          {{QScalar(1), Word{dxid[i][a], tau}}, {-QScalar::q_power(-2), Word{tau, dxid[i][a]}}});
      // The parameter c is central and periodic: it passes dx unchanged.
      rels.push_back({{QScalar(1), Word{xid[i][a], c}}, {QScalar(-1), Word{c, xid[i][a]}}});
      rels.push_back({{QScalar(1), Word{dxid[i][a], c}}, {QScalar(-1), Word{c, dxid[i][a]}}});
    }
  rels.push_back({{QScalar(1), Word{tau, c}}, {QScalar(-1), Word{c, tau}}});
  b.add_relations(rels, RewriteRule::Kind::Exchange);

  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int a = 1; a <= 2; ++a)
        for (int bb = 1; bb <= 2; ++bb) {
          RawRelation rhs;
          for (int l = 1; l <= 2; ++l)
            for (int m = 1; m <= 2; ++m)
              for (int g = 1; g <= 2; ++g)
                for (int r2 = 1; r2 <= 2; ++r2) {
                  QScalar cv = r_matrix(i, k, l, m) * r_matrix(g, r2, a, bb);
                  if (!cv.is_zero()) rhs.push_back({cv, Word{dxid[l][g], xid[m][r2]}});
                }
          b.add_rule(xid[i][a], dxid[k][bb], rhs, RewriteRule::Kind::Exchange);
        }
  {
    std::vector<RawRelation> drels;
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int a = 1; a <= 2; ++a)
          for (int bb = 1; bb <= 2; ++bb) {
            RawRelation r;
            r.push_back({QScalar(1), Word{dxid[i][a], dxid[k][bb]}});
            for (int l = 1; l <= 2; ++l)
              for (int m = 1; m <= 2; ++m)
                for (int g = 1; g <= 2; ++g)
                  for (int r2 = 1; r2 <= 2; ++r2) {
                    QScalar cv = r_matrix(i, k, l, m) * r_matrix(g, r2, a, bb);
                    if (!cv.is_zero()) r.push_back({cv, Word{dxid[l][g], dxid[m][r2]}});
                  }
            drels.push_back(std::move(r));
          }
    b.add_relations(drels, RewriteRule::Kind::Exchange);
  }

  b.define_inverse("g", tau, c, span);

  GaugeAlgebra ga;
  ga.span = span;
  ga.alg = b.build();

  GradedDerivation d(ga.alg, "dx");
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 2; ++a) {
      d.set_image(ga.x(i, a), NCPoly::gen(*ga.alg, ga.dxg(i, a)));
      d.set_image(ga.dxg(i, a), NCPoly(ga.alg.get()));
    }
  d.set_image(c, NCPoly(ga.alg.get()));
  // d tau by the Leibniz rule on the defining quadratic.
  NCPoly dtau(ga.alg.get());
  {
    NCPoly quad(ga.alg.get());
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int a = 1; a <= 2; ++a)
          for (int bb = 1; bb <= 2; ++bb) {
            QScalar cv = epsilon_upper(bb, a) * epsilon_lower(k, i) *
                         (-QScalar::q_power(1) / (QScalar(1) + QScalar::q_power(2)));
            if (cv.is_zero()) continue;
            dtau.add_term(Word{dxid[i][a], xid[k][bb]}, cv);
            dtau.add_term(Word{xid[i][a], dxid[k][bb]}, cv);
          }
    dtau = ga.alg->normal_form(dtau);
    d.set_image(tau, dtau);
  }
  // d g(m) = -q^m g(m) (d tau) g(m), reduced.  The tower index counts powers
  // of q in front of tau.
  for (int m = -span; m <= span; ++m) {
    NCPoly gm = NCPoly::gen(*ga.alg, ga.g(m));
    NCPoly img = gm * dtau * gm * (-QScalar::q_power(m));
    bool ok = true;
    NCPoly nf(ga.alg.get());
    try {
      nf = ga.alg->normal_form(img);
    } catch (const std::exception&) {
      ok = false;  // tower boundary: leave the image unassigned
    }
    if (ok) d.set_image(ga.g(m), nf);
  }
  ga.d = std::move(d);
  return ga;
}

GaugeForm build_instanton(const GaugeAlgebra& ga) {
  const Algebra& A = *ga.alg;
  GaugeForm f;
  f.degree = 1;
  for (int a = 1; a <= 2; ++a)
    for (int bb = 1; bb <= 2; ++bb) {
      NCPoly acc(&A);
      for (int al = 1; al <= 2; ++al)
        for (int k = 1; k <= 2; ++k)
          for (int be = 1; be <= 2; ++be) {
            QScalar cv = epsilon_lower(bb, k) * epsilon_upper(be, al);
            if (cv.is_zero()) continue;
            acc.add_term(Word{ga.dxg(a, al), ga.x(k, be), ga.g(0)}, cv);
          }
      f.e[a - 1][bb - 1] = A.normal_form(acc);
    }
  return f;
}

GaugeForm curvature(const GaugeAlgebra& ga, const GaugeForm& A) {
  const Algebra& alg = *ga.alg;
  GaugeForm F;
  F.degree = A.degree + 1;
  for (int a = 0; a < 2; ++a)
    for (int bb = 0; bb < 2; ++bb) {
      NCPoly acc = ga.d.apply(A.e[a][bb]);
      for (int cc = 0; cc < 2; ++cc) acc -= alg.normal_form(A.e[a][cc] * A.e[cc][bb]);
      F.e[a][bb] = alg.normal_form(acc);
    }
  return F;
}

namespace {

// 16x16 channel projector acting on the (quantum pair, spinor pair) space.
struct PairChannels {
  Mat4 pL, pR, mL, mR;  // P+/P- for the two index families (identical R copies)
  explicit PairChannels(const std::optional<Rational>& s0) {
    pL = projector_mat4(+1, s0);
    mL = projector_mat4(-1, s0);
    pR = pL;
    mR = mL;
  }
};

}  // namespace

TwoFormComponents two_form_components(const GaugeAlgebra& ga, const NCPoly& two_form) {
  const Algebra& A = *ga.alg;
  NCPoly nf = A.normal_form(two_form);
  // In normal form the two dx letters lead the word and the scalar tail
  // multiplies from the right, matching the basis expansion.
  std::map<std::array<int, 4>, NCPoly> raw;
  for (const auto& [w, cv] : nf.terms()) {
    if (w.size() < 2 || A.gen(w[0]).cls != "dx" || A.gen(w[1]).cls != "dx") {
      throw std::invalid_argument("two_form_components: word is not a 2-form: " + A.word_str(w));
    }
    const auto& g1 = A.gen(w[0]);
    const auto& g2 = A.gen(w[1]);
    Word tail(w.begin() + 2, w.end());
    std::array<int, 4> key{g1.idx[0], g2.idx[0], g1.idx[1], g2.idx[1]};
    auto& acc = raw[key];
    if (!acc.algebra()) acc = NCPoly(&A);
    acc.add_term(tail, cv);
  }
  // Canonical lift into the -1 eigenspace of R x R.
  PairChannels ch(A.specialization());
  TwoFormComponents out;
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int al = 1; al <= 2; ++al)
        for (int be = 1; be <= 2; ++be) {
          NCPoly acc(&A);
          for (const auto& [key, t] : raw) {
            const int qi = pair_index(key[0], key[1]);
            const int si = pair_index(key[2], key[3]);
            QScalar w1 = ch.pL[pair_index(i, k)][qi] * ch.mR[pair_index(al, be)][si] +
                         ch.mL[pair_index(i, k)][qi] * ch.pR[pair_index(al, be)][si];
            if (!w1.is_zero()) acc.add_scaled(t, w1);
          }
          acc = A.normal_form(acc);
          if (!acc.is_zero()) out.comps[{i, k, al, be}] = std::move(acc);
        }
  return out;
}

AsdResult check_anti_self_dual(const GaugeAlgebra& ga, const GaugeForm& F) {
  const Algebra& A = *ga.alg;
  AsdResult res;
  PairChannels ch(A.specialization());
  bool all_zero = true;
  NCPoly worst(&A);
  for (int a = 0; a < 2; ++a)
    for (int bb = 0; bb < 2; ++bb) {
      TwoFormComponents tc = two_form_components(ga, F.e[a][bb]);
      // The complementary duality channel P-_L P+_R of the canonical family
      // must vanish: anti-self-dual curvature lives entirely in the
      // eps-singlet channel of the second index family.
      for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k)
          for (int al = 1; al <= 2; ++al)
            for (int be = 1; be <= 2; ++be) {
              NCPoly acc(&A);
              for (const auto& [key, t] : tc.comps) {
                QScalar w1 = ch.mL[pair_index(i, k)][pair_index(key[0], key[1])] *
                             ch.pR[pair_index(al, be)][pair_index(key[2], key[3])];
                if (!w1.is_zero()) acc.add_scaled(t, w1);
              }
              acc = A.normal_form(acc);
              if (!acc.is_zero()) {
                all_zero = false;
                if (worst.is_zero()) worst = acc;
              }
            }
      // Singlet extraction F^{ik} = 1/2 eps^{alpha beta} G_{(ik)(alpha beta)}.
      for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k) {
          NCPoly acc(&A);
          for (int al = 1; al <= 2; ++al)
            for (int be = 1; be <= 2; ++be) {
              auto it = tc.comps.find({i, k, al, be});
              if (it == tc.comps.end()) continue;
              acc.add_scaled(it->second, epsilon_upper(al, be) * QScalar(Rational(1, 2)));
            }
          acc = A.normal_form(acc);
          if (!acc.is_zero()) res.singlet[{a + 1, bb + 1, i, k}] = std::move(acc);
        }
    }
  CheckResult c;
  c.id = "gauge/asd-projection";
  c.relation = "anti-self-duality";
  c.status = all_zero ? CheckStatus::Pass : CheckStatus::Fail;
  if (!all_zero) c.residual = worst.str();
  res.checks.push_back(std::move(c));
  res.passed = all_zero;
  return res;
}

NCPoly q_trace(const GaugeAlgebra& ga, const GaugeForm& M) {
  const Algebra& A = *ga.alg;
  return A.normal_form(M.e[0][0] * QScalar::q_power(-1) + M.e[1][1] * QScalar::q_power(1));
}

std::vector<CheckResult> check_traces(const GaugeAlgebra& ga, const GaugeForm& A,
                                      const GaugeForm& F) {
  const Algebra& alg = *ga.alg;
  std::vector<CheckResult> out;
  {
    CheckResult c;
    c.id = "gauge/trace-F";
    c.relation = "q-traceless-curvature";
    NCPoly t = q_trace(ga, F);
    c.status = t.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
    if (!t.is_zero()) c.residual = t.str();
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.id = "gauge/dtrace-A";
    c.relation = "abelian-field-strength";
    NCPoly t = alg.normal_form(ga.d.apply(q_trace(ga, A)));
    c.status = t.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
    if (!t.is_zero()) c.residual = t.str();
    out.push_back(std::move(c));
  }
  return out;
}

CheckResult exploratory_connection_exchange(const GaugeAlgebra& ga, const GaugeForm& Af) {
  const Algebra& alg = *ga.alg;
  // Pair-space composition of A x I with the R matrix:
  // E = A1 R A1 + R A1 R A1 R; the residual is reported only.
  auto lift = [&](const GaugeForm& M) {
    std::array<std::array<NCPoly, 4>, 4> L;
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int cc = 1; cc <= 2; ++cc)
          for (int d2 = 1; d2 <= 2; ++d2) {
            NCPoly v(&alg);
            if (b == d2) v = M.e[a - 1][cc - 1];
            L[pair_index(a, b)][pair_index(cc, d2)] = v;
          }
    return L;
  };
  auto rmat = [&]() {
    std::array<std::array<NCPoly, 4>, 4> L;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) L[i][j] = NCPoly(&alg);
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int cc = 1; cc <= 2; ++cc)
          for (int d2 = 1; d2 <= 2; ++d2) {
            QScalar v = r_matrix(a, b, cc, d2);
            if (!v.is_zero())
              L[pair_index(a, b)][pair_index(cc, d2)] = NCPoly::term(alg, v, Word{});
          }
    return L;
  }();
  auto mul = [&](const auto& X, const auto& Y) {
    std::array<std::array<NCPoly, 4>, 4> R2;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        NCPoly acc(&alg);
        for (int k = 0; k < 4; ++k) acc += X[i][k] * Y[k][j];
        R2[i][j] = alg.normal_form(acc);
      }
    return R2;
  };
  auto A1 = lift(Af);
  auto e1 = mul(mul(A1, rmat), A1);
  auto e2 = mul(mul(mul(mul(rmat, A1), rmat), A1), rmat);
  NCPoly worst(&alg);
  long nonzero = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      NCPoly s = alg.normal_form(e1[i][j] + e2[i][j]);
      if (!s.is_zero()) {
        ++nonzero;
        if (worst.is_zero()) worst = s;
      }
    }
  CheckResult c;
  c.id = "gauge/connection-exchange";
  c.relation = "connection-exchange-candidate";
  c.status = CheckStatus::Exploratory;
  c.residual = nonzero == 0 ? "" : ("nonzero in " + std::to_string(nonzero) +
                                    " pair slots; first: " + worst.str());
  return c;
}

std::vector<CheckResult> verify_two_form_resolution(const GaugeAlgebra& ga) {
  const Algebra& A = *ga.alg;
  std::vector<CheckResult> out;
  PairChannels ch(A.specialization());
  NCPoly worst(&A);
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int al = 1; al <= 2; ++al)
        for (int be = 1; be <= 2; ++be) {
          NCPoly acc = ga.dxpoly(i, al) * ga.dxpoly(k, be);
          for (int l = 1; l <= 2; ++l)
            for (int m = 1; m <= 2; ++m)
              for (int g = 1; g <= 2; ++g)
                for (int r2 = 1; r2 <= 2; ++r2) {
                  QScalar w1 =
                      ch.pL[pair_index(i, k)][pair_index(l, m)] *
                          ch.mR[pair_index(al, be)][pair_index(g, r2)] +
                      ch.mL[pair_index(i, k)][pair_index(l, m)] *
                          ch.pR[pair_index(al, be)][pair_index(g, r2)];
                  if (!w1.is_zero()) acc.add_scaled(ga.dxpoly(l, g) * ga.dxpoly(m, r2), -w1);
                }
          NCPoly nf = A.normal_form(acc);
          if (!nf.is_zero() && worst.is_zero()) worst = nf;
        }
  CheckResult c;
  c.id = "gauge/two-form-resolution";
  c.relation = "two-form-resolution";
  c.status = worst.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
  if (!worst.is_zero()) c.residual = worst.str();
  out.push_back(std::move(c));
  return out;
}

std::vector<CheckResult> verify_gauge(const GaugeAlgebra& ga, uint64_t seed) {
  const Algebra& A = *ga.alg;
  std::vector<CheckResult> out = verify_two_form_resolution(ga);

  // curvature(0) = 0
  {
    GaugeForm zero;
    zero.degree = 1;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) zero.e[a][b] = NCPoly(&A);
    GaugeForm F = curvature(ga, zero);
    NCPoly worst(&A);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        if (!F.e[a][b].is_zero() && worst.is_zero()) worst = F.e[a][b];
    CheckResult c;
    c.id = "gauge/curvature-zero";
    c.relation = "curvature";
    c.status = worst.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
    if (!worst.is_zero()) c.residual = worst.str();
    out.push_back(std::move(c));
  }
  // Tower bookkeeping: g(0) (c + tau) = 1 both ways.
  {
    NCPoly g0 = NCPoly::gen(A, ga.g(0));
    NCPoly z = NCPoly::gen(A, ga.c()) + NCPoly::gen(A, ga.tau());
    NCPoly lhs = A.normal_form(g0 * z) - NCPoly::unit(A);
    NCPoly rhs = A.normal_form(z * g0) - NCPoly::unit(A);
    CheckResult c;
    c.id = "gauge/tower-defining";
    c.relation = "inverse-tower";
    NCPoly worst = !A.normal_form(lhs).is_zero() ? lhs : rhs;
    worst = A.normal_form(worst);
    c.status = worst.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
    if (!worst.is_zero()) c.residual = worst.str();
    out.push_back(std::move(c));
    // g(0) dx = dx g(2): the tower index counts q powers.
    NCPoly p = A.normal_form(g0 * ga.dxpoly(1, 1)) -
               A.normal_form(ga.dxpoly(1, 1) * NCPoly::gen(A, ga.g(2)));
    CheckResult c2;
    c2.id = "gauge/tower-pass";
    c2.relation = "inverse-tower";
    p = A.normal_form(p);
    c2.status = p.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
    if (!p.is_zero()) c2.residual = p.str();
    out.push_back(std::move(c2));
  }
  // Random 2-form has a nonzero q-trace (negative control for the trace law).
  {
    std::mt19937_64 rng(seed);
    GaugeForm W;
    W.degree = 2;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        NCPoly acc(&A);
        for (int t = 0; t < 3; ++t) {
          const int i = 1 + static_cast<int>(rng() % 2), k = 1 + static_cast<int>(rng() % 2);
          const int al = 1 + static_cast<int>(rng() % 2), be = 1 + static_cast<int>(rng() % 2);
          acc.add_term(Word{ga.dxg(i, al), ga.dxg(k, be)},
                       QScalar(Rational(1 + static_cast<int>(rng() % 5))));
        }
        W.e[a][b] = A.normal_form(acc);
      }
    NCPoly t = q_trace(ga, W);
    CheckResult c;
    c.id = "gauge/trace-generic-nonzero";
    c.relation = "q-trace";
    c.status = !t.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
    if (t.is_zero()) c.residual = "q-trace of a generic 2-form vanished unexpectedly";
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> verify_instanton(const GaugeAlgebra& ga, bool dump_components,
                                          std::string* dump_out) {
  const Algebra& A = *ga.alg;
  std::vector<CheckResult> out;
  GaugeForm Af = build_instanton(ga);
  GaugeForm F = curvature(ga, Af);

  AsdResult asd = check_anti_self_dual(ga, F);
  for (auto& c : asd.checks) out.push_back(std::move(c));
  {
    // The singlet must reproduce F: F^a_b = sum dx^i_a dx^k_b eps_{ba} F^{ik}.
    NCPoly worst(&A);
    for (int a = 0; a < 2; ++a)
      for (int bb = 0; bb < 2; ++bb) {
        NCPoly rebuilt(&A);
        for (int i = 1; i <= 2; ++i)
          for (int k = 1; k <= 2; ++k) {
            auto it = asd.singlet.find({a + 1, bb + 1, i, k});
            if (it == asd.singlet.end()) continue;
            for (int al = 1; al <= 2; ++al)
              for (int be = 1; be <= 2; ++be) {
                QScalar cv = epsilon_lower(be, al);
                if (cv.is_zero()) continue;
                rebuilt += (ga.dxpoly(i, al) * ga.dxpoly(k, be)) * cv * it->second;
              }
          }
        NCPoly diff = A.normal_form(rebuilt - F.e[a][bb]);
        if (!diff.is_zero() && worst.is_zero()) worst = diff;
      }
    CheckResult c;
    c.id = "gauge/asd-singlet-rebuild";
    c.relation = "anti-self-duality";
    c.status = worst.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
    if (!worst.is_zero()) c.residual = worst.str();
    out.push_back(std::move(c));
  }
  {
    auto tr = check_traces(ga, Af, F);
    for (auto& c : tr) out.push_back(std::move(c));
  }
  // Negative control: a manufactured self-dual 2-form must fail the check.
  {
    GaugeForm W;
    W.degree = 2;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) W.e[a][b] = NCPoly(&A);
    NCPoly sd(&A);
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k) {
        QScalar cv = epsilon_lower(k, i);
        if (!cv.is_zero()) sd.add_term(Word{ga.dxg(i, 1), ga.dxg(k, 1)}, cv);
      }
    W.e[0][0] = A.normal_form(sd);
    AsdResult neg = check_anti_self_dual(ga, W);
    CheckResult c;
    c.id = "gauge/asd-negative-control";
    c.relation = "anti-self-duality";
    c.status = !neg.passed ? CheckStatus::Pass : CheckStatus::Fail;
    if (neg.passed) c.residual = "self-dual test form passed the anti-self-duality check";
    out.push_back(std::move(c));
  }
  out.push_back(exploratory_connection_exchange(ga, Af));
  // Tower depth bound in the curvature.
  {
    int max_abs = 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (const auto& [w, cv] : F.e[a][b].terms())
          for (GenId g : w)
            if (A.gen(g).cls == "g") max_abs = std::max(max_abs, std::abs(A.gen(g).idx[0]));
    CheckResult c;
    c.id = "gauge/tower-depth";
    c.relation = "inverse-tower";
    c.status = max_abs <= 4 ? CheckStatus::Pass : CheckStatus::Fail;
    if (max_abs > 4) c.residual = "tower index " + std::to_string(max_abs) + " exceeds 4";
    out.push_back(std::move(c));
  }
  if (dump_components && dump_out) {
    std::ostringstream os;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        TwoFormComponents tc = two_form_components(ga, F.e[a][b]);
        for (const auto& [key, t] : tc.comps) {
          os << "F[" << (a + 1) << "][" << (b + 1) << "](" << key[0] << key[1] << ";" << key[2]
             << key[3] << ") = " << t.str() << "\n";
        }
      }
    *dump_out = os.str();
  }
  return out;
}

}  // namespace qgv

#include "qgv/espace.hpp"

#include <random>

namespace qgv {

NCPoly EuclideanAlgebra::tau_quadratic() const {
  NCPoly out(alg.get());
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int a = 1; a <= 2; ++a)
        for (int bb = 1; bb <= 2; ++bb) {
          QScalar c = epsilon_upper(bb, a) * epsilon_lower(k, i);
          if (c.is_zero()) continue;
          out.add_term(Word{x(i, a), x(k, bb)}, c);
        }
  const QScalar pref = -QScalar::q_power(1) / (QScalar(1) + QScalar::q_power(2));
  return out * pref;
}

NCPoly EuclideanAlgebra::inverse_matrix(int a, int i) const {
  NCPoly out(alg.get());
  for (int l = 1; l <= 2; ++l)
    for (int bb = 1; bb <= 2; ++bb) {
      QScalar c = epsilon_lower(i, l) * epsilon_upper(bb, a);
      if (c.is_zero()) continue;
      out.add_term(Word{x(l, bb), tinv()}, c);
    }
  return out;
}

EuclideanAlgebra build_espace(std::optional<Rational> s0) {
  AlgebraBuilder b("espace", s0);

  // Central scalars sort to the right of the coordinate sector so they stay
  // adjacent to their formal inverses.
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
  GeneratorInfo gt;
  gt.cls = "tau";
  gt.grade = 0;
  gt.charge = 0;
  gt.weight = 0;
  gt.name = "tau";
  const GenId tau = b.add_generator(gt);

  // Coordinate exchange + the interval: R x x' = x x' R and
  // tau = -q/(1+q^2) eps eps x x, solved together so the largest word of the
  // determinant relation collapses to the atomic tau.
  std::vector<RawRelation> rels;
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int a = 1; a <= 2; ++a)
        for (int bb = 1; bb <= 2; ++bb) {
          RawRelation r;
          for (int l = 1; l <= 2; ++l)
            for (int m = 1; m <= 2; ++m) {
              QScalar c = r_matrix(i, k, l, m);
              if (!c.is_zero()) r.push_back({c, Word{xid[l][a], xid[m][bb]}});
              QScalar c2 = r_matrix(l, m, a, bb);  // R^{gr}_{ab} with (g,r)=(l,m)
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
            QScalar c = epsilon_upper(bb, a) * epsilon_lower(k, i);
            c = c * (-QScalar::q_power(1) / (QScalar(1) + QScalar::q_power(2)));
            if (!c.is_zero()) r.push_back({c, Word{xid[i][a], xid[k][bb]}});
          }
    r.push_back({QScalar(-1), Word{tau}});
    rels.push_back(std::move(r));
  }
  // tau passes x unchanged and dx with the q^2 twist.
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 2; ++a) {
      rels.push_back({{QScalar(1), Word{xid[i][a], tau}}, {QScalar(-1), Word{tau, xid[i][a]}}});
      rels.push_back(
          {{QScalar(1), Word{dxid[i][a], tau}}, {-QScalar::q_power(-2), Word{tau, dxid[i][a]}}});
    }
  b.add_relations(rels, RewriteRule::Kind::Exchange);

  // x dx' = R dx x' R, already in solved form.
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int a = 1; a <= 2; ++a)
        for (int bb = 1; bb <= 2; ++bb) {
          RawRelation rhs;
          for (int l = 1; l <= 2; ++l)
            for (int m = 1; m <= 2; ++m)
              for (int g = 1; g <= 2; ++g)
                for (int r2 = 1; r2 <= 2; ++r2) {
                  QScalar c = r_matrix(i, k, l, m) * r_matrix(g, r2, a, bb);
                  if (!c.is_zero()) rhs.push_back({c, Word{dxid[l][g], xid[m][r2]}});
                }
          b.add_rule(xid[i][a], dxid[k][bb], rhs, RewriteRule::Kind::Exchange);
        }

  // Two-form exchange dx dx' = -R dx dx' R, derived by differentiating the
  // x-dx relation; solved by elimination.
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
                    QScalar c = r_matrix(i, k, l, m) * r_matrix(g, r2, a, bb);
                    if (!c.is_zero()) r.push_back({c, Word{dxid[l][g], dxid[m][r2]}});
                  }
            drels.push_back(std::move(r));
          }
    b.add_relations(drels, RewriteRule::Kind::Exchange);
  }

  // Formal inverse of the interval.
  b.define_inverse("tinv", tau, std::nullopt, 0);

  EuclideanAlgebra es;
  es.alg = b.build();

  GradedDerivation d(es.alg, "dx");
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 2; ++a) {
      d.set_image(es.x(i, a), NCPoly::gen(*es.alg, es.dxg(i, a)));
      d.set_image(es.dxg(i, a), NCPoly(es.alg.get()));
    }
  // d tau from the quadratic by the Leibniz rule; d tinv = -tinv (d tau) tinv.
  {
    NCPoly dtau(es.alg.get());
    const NCPoly quad = es.tau_quadratic();
    for (const auto& [w, c] : quad.terms()) {
      dtau.add_term(Word{es.dxg(es.alg->gen(w[0]).idx[0], es.alg->gen(w[0]).idx[1]), w[1]}, c);
      dtau.add_term(Word{w[0], es.dxg(es.alg->gen(w[1]).idx[0], es.alg->gen(w[1]).idx[1])}, c);
    }
    dtau = es.alg->normal_form(dtau);
    d.set_image(es.tau(), dtau);
    NCPoly dtinv = es.alg->normal_form(-(es.tinvpoly() * dtau * es.tinvpoly()));
    d.set_image(es.tinv(), dtinv);
  }
  es.d = std::move(d);
  return es;
}

NCPoly tau_poly(const EuclideanAlgebra& es) {
  return es.alg->normal_form(es.tau_quadratic());
}

NCPoly espace_conj(const EuclideanAlgebra& es, const NCPoly& p) {
  const Algebra& A = *es.alg;
  NCPoly out(&A);
  for (const auto& [w, c] : p.terms()) {
    // conj reverses the word and conjugates each generator; coefficients are
    // fixed (q is real).
    NCPoly acc = NCPoly::term(A, c, Word{});
    for (size_t j = w.size(); j-- > 0;) {
      const GeneratorInfo& gi = A.gen(w[j]);
      NCPoly cg(&A);
      if (gi.cls == "x") {
        for (int k = 1; k <= 2; ++k)
          for (int bb = 1; bb <= 2; ++bb) {
            QScalar cc = epsilon_lower(gi.idx[0], k) * epsilon_upper(bb, gi.idx[1]);
            if (!cc.is_zero()) cg.add_term(Word{es.x(k, bb)}, cc);
          }
      } else if (gi.cls == "tau" || gi.cls == "tinv") {
        cg.add_term(Word{w[j]}, QScalar(1));
      } else {
        throw std::invalid_argument("espace_conj: involution not defined on " + gi.name);
      }
      acc = acc * cg;
    }
    out += acc;
  }
  return A.normal_form(out);
}

OmegaXi omega_xi(const EuclideanAlgebra& es) {
  const Algebra& A = *es.alg;
  OmegaXi r;
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k) {
      NCPoly w(&A);
      for (int a = 1; a <= 2; ++a) {
        w += es.dxpoly(i, a) * es.inverse_matrix(a, k);
      }
      r.omega[i - 1][k - 1] = A.normal_form(w);
    }
  r.xi = A.normal_form(r.omega[0][0] * QScalar::q_power(-1) + r.omega[1][1] * QScalar::q_power(1));
  return r;
}

namespace {

CheckResult zero_check(const std::string& id, const std::string& rel, const NCPoly& v) {
  CheckResult c;
  c.id = id;
  c.relation = rel;
  if (v.is_zero()) {
    c.status = CheckStatus::Pass;
  } else {
    c.status = CheckStatus::Fail;
    c.residual = v.str();
  }
  return c;
}

}  // namespace

std::vector<CheckResult> verify_espace(const EuclideanAlgebra& es, uint64_t seed) {
  const Algebra& A = *es.alg;
  std::vector<CheckResult> out;
  const QScalar q2 = QScalar::q_power(2);
  const QScalar lam = A.specialization() ? QScalar::lambda().specialized(*A.specialization())
                                         : QScalar::lambda();

  // Defining exchange relations reduce to zero.
  {
    NCPoly worst(&A);
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int a = 1; a <= 2; ++a)
          for (int bb = 1; bb <= 2; ++bb) {
            NCPoly acc(&A);
            for (int l = 1; l <= 2; ++l)
              for (int m = 1; m <= 2; ++m) {
                acc.add_scaled(es.xpoly(l, a) * es.xpoly(m, bb), r_matrix(i, k, l, m));
                acc.add_scaled(es.xpoly(i, l) * es.xpoly(k, m), -r_matrix(l, m, a, bb));
              }
            NCPoly nf = A.normal_form(acc);
            if (!nf.is_zero() && worst.is_zero()) worst = nf;
          }
    out.push_back(zero_check("espace/xx-exchange", "coordinate-exchange", worst));
  }
  {
    NCPoly worst(&A);
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int a = 1; a <= 2; ++a)
          for (int bb = 1; bb <= 2; ++bb) {
            NCPoly acc = es.xpoly(i, a) * es.dxpoly(k, bb);
            for (int l = 1; l <= 2; ++l)
              for (int m = 1; m <= 2; ++m)
                for (int g = 1; g <= 2; ++g)
                  for (int r2 = 1; r2 <= 2; ++r2) {
                    acc.add_scaled(es.dxpoly(l, g) * es.xpoly(m, r2),
                                   -(r_matrix(i, k, l, m) * r_matrix(g, r2, a, bb)));
                  }
            NCPoly nf = A.normal_form(acc);
            if (!nf.is_zero() && worst.is_zero()) worst = nf;
          }
    out.push_back(zero_check("espace/x-dx-exchange", "calculus-exchange", worst));
  }
  // Differentiated exchange: dx dx' + R dx dx' R = 0 identically.
  {
    NCPoly worst(&A);
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int a = 1; a <= 2; ++a)
          for (int bb = 1; bb <= 2; ++bb) {
            NCPoly acc = es.dxpoly(i, a) * es.dxpoly(k, bb);
            for (int l = 1; l <= 2; ++l)
              for (int m = 1; m <= 2; ++m)
                for (int g = 1; g <= 2; ++g)
                  for (int r2 = 1; r2 <= 2; ++r2) {
                    acc.add_scaled(es.dxpoly(l, g) * es.dxpoly(m, r2),
                                   r_matrix(i, k, l, m) * r_matrix(g, r2, a, bb));
                  }
            NCPoly nf = A.normal_form(acc);
            if (!nf.is_zero() && worst.is_zero()) worst = nf;
          }
    out.push_back(zero_check("espace/two-form-exchange", "two-form-exchange", worst));
  }
  // tau: atomic form equals the quadratic, is central, and obeys the dx twist.
  out.push_back(zero_check("espace/tau-atomic", "central-interval",
                           A.normal_form(es.taupoly() - es.tau_quadratic())));
  {
    NCPoly worst(&A);
    for (int i = 1; i <= 2; ++i)
      for (int a = 1; a <= 2; ++a) {
        NCPoly c1 = A.normal_form(es.tau_quadratic() * es.xpoly(i, a) -
                                  es.xpoly(i, a) * es.tau_quadratic());
        if (!c1.is_zero() && worst.is_zero()) worst = c1;
      }
    out.push_back(zero_check("espace/tau-central", "central-interval", worst));
  }
  {
    NCPoly worst(&A);
    for (int i = 1; i <= 2; ++i)
      for (int a = 1; a <= 2; ++a) {
        NCPoly c1 = A.normal_form(es.tau_quadratic() * es.dxpoly(i, a) -
                                  es.dxpoly(i, a) * es.tau_quadratic() * q2);
        if (!c1.is_zero() && worst.is_zero()) worst = c1;
      }
    out.push_back(zero_check("espace/tau-dx-twist", "interval-calculus", worst));
  }
  // Involution: conj conj = id on generators, conj(tau) = tau, and
  // conj(x^i_a) = tau S^a_i.
  {
    NCPoly worst(&A);
    for (int i = 1; i <= 2; ++i)
      for (int a = 1; a <= 2; ++a) {
        NCPoly c1 = A.normal_form(espace_conj(es, espace_conj(es, es.xpoly(i, a))) -
                                  es.xpoly(i, a));
        if (!c1.is_zero() && worst.is_zero()) worst = c1;
        NCPoly c2 = A.normal_form(espace_conj(es, es.xpoly(i, a)) -
                                  es.taupoly() * es.inverse_matrix(a, i));
        if (!c2.is_zero() && worst.is_zero()) worst = c2;
      }
    NCPoly c3 = A.normal_form(espace_conj(es, es.taupoly()) - es.taupoly());
    if (!c3.is_zero() && worst.is_zero()) worst = c3;
    // conj conj = id on random short x-words.
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 50; ++t) {
      Word w;
      const int len = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < len; ++j)
        w.push_back(es.x(1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2)));
      NCPoly f = NCPoly::term(A, QScalar(1), w);
      NCPoly c4 = A.normal_form(espace_conj(es, espace_conj(es, f)) - f);
      if (!c4.is_zero() && worst.is_zero()) worst = c4;
    }
    out.push_back(zero_check("espace/involution", "involution", worst));
  }
  // S(x) x = x S(x) = 1 (matrix contraction).
  {
    NCPoly worst(&A);
    for (int a = 1; a <= 2; ++a)
      for (int bb = 1; bb <= 2; ++bb) {
        NCPoly acc(&A);
        for (int i = 1; i <= 2; ++i) acc += es.inverse_matrix(a, i) * es.xpoly(i, bb);
        if (a == bb) acc.add_term(Word{}, QScalar(-1));
        NCPoly nf = A.normal_form(acc);
        if (!nf.is_zero() && worst.is_zero()) worst = nf;
      }
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k) {
        NCPoly acc(&A);
        for (int a = 1; a <= 2; ++a) acc += es.xpoly(i, a) * es.inverse_matrix(a, k);
        if (i == k) acc.add_term(Word{}, QScalar(-1));
        NCPoly nf = A.normal_form(acc);
        if (!nf.is_zero() && worst.is_zero()) worst = nf;
      }
    out.push_back(zero_check("espace/inverse-matrix", "inverse-matrix", worst));
  }
  // d^2 = 0 on generators and random mixed words.
  {
    NCPoly worst(&A);
    for (GenId g = 0; g < A.gen_count(); ++g) {
      NCPoly dd = es.d.apply(es.d.apply(NCPoly::gen(A, g)));
      if (!dd.is_zero() && worst.is_zero()) worst = dd;
    }
    std::mt19937_64 rng(seed + 1);
    for (int t = 0; t < 200; ++t) {
      const int len = 1 + static_cast<int>(rng() % 5);
      Word w;
      for (int j = 0; j < len; ++j) w.push_back(static_cast<GenId>(rng() % A.gen_count()));
      NCPoly dd = es.d.apply(es.d.apply(A.normal_form(NCPoly::term(A, QScalar(1), w))));
      if (!dd.is_zero() && worst.is_zero()) worst = dd;
    }
    out.push_back(zero_check("espace/d-nilpotent", "nilpotency", worst));
  }
  // The right-invariant form and its quantum trace.
  {
    OmegaXi ox = omega_xi(es);
    out.push_back(zero_check("espace/xi-squared", "trace-form",
                             A.normal_form(ox.xi * ox.xi)));
    out.push_back(zero_check("espace/xi-closed", "trace-form", es.d.apply(ox.xi)));
    NCPoly worst(&A);
    for (int i = 1; i <= 2; ++i)
      for (int a = 1; a <= 2; ++a) {
        NCPoly lhs = A.normal_form(es.xpoly(i, a) * ox.xi - ox.xi * es.xpoly(i, a) -
                                   es.dxpoly(i, a) * (q2 * lam));
        if (!lhs.is_zero() && worst.is_zero()) worst = lhs;
      }
    out.push_back(zero_check("espace/dx-from-xi", "trace-form", worst));
    out.push_back(zero_check(
        "espace/dtau-xi", "trace-form",
        A.normal_form(es.d.apply(es.taupoly()) * QScalar::s_power(2) - ox.xi * es.taupoly())));
    // d omega = omega^2 = -(q^2 lambda)^{-1} {xi, omega}
    NCPoly worst2(&A);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        NCPoly sq(&A);
        for (int j = 0; j < 2; ++j) sq += ox.omega[i][j] * ox.omega[j][k];
        sq = A.normal_form(sq);
        NCPoly c1 = A.normal_form(es.d.apply(ox.omega[i][k]) - sq);
        if (!c1.is_zero() && worst2.is_zero()) worst2 = c1;
        NCPoly anti = A.normal_form(ox.xi * ox.omega[i][k] + ox.omega[i][k] * ox.xi);
        NCPoly c2 = A.normal_form(sq * (q2 * lam) + anti);
        if (!c2.is_zero() && worst2.is_zero()) worst2 = c2;
      }
    out.push_back(zero_check("espace/omega-structure", "trace-form", worst2));
  }
  return out;
}

}  // namespace qgv

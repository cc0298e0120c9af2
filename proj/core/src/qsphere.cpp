#include "qgv/qsphere.hpp"

#include <algorithm>
#include <functional>

namespace qgv {

namespace {

int charge_label(int a) { return a > 0 ? 1 : 2; }  // U(1) alphabet: + -> 1, - -> 2

}  // namespace

GenId SphereAlgebra::u(int i, int a) const { return alg->need("u", i, a); }
GenId SphereAlgebra::theta(int p) const { return alg->need("t", p); }
NCPoly SphereAlgebra::upoly(int i, int a) const { return NCPoly::gen(*alg, u(i, a)); }
NCPoly SphereAlgebra::tpoly(int p) const { return NCPoly::gen(*alg, theta(p)); }

NCPoly SphereAlgebra::ubar(int a, int i) const {
  // ubar^a_i = eps_{ik} u^k_b eps^{ba}
  NCPoly out(alg.get());
  for (int k = 1; k <= 2; ++k) {
    for (int bsgn : {+1, -1}) {
      QScalar c = epsilon_lower(i, k) * epsilon_upper(charge_label(bsgn), charge_label(a));
      if (c.is_zero()) continue;
      out.add_term(Word{u(k, bsgn)}, c);
    }
  }
  return out;
}

NCPoly SphereAlgebra::theta_mat(int b, int a) const {
  // theta^b_a; Tr_q theta = 0 eliminates theta^-_- = -q^2 theta0.
  if (b > 0 && a > 0) return tpoly(0);
  if (b < 0 && a > 0) return tpoly(2);
  if (b > 0 && a < 0) return tpoly(-2);
  return tpoly(0) * (-QScalar::q_power(2));
}

SphereAlgebra build_sphere(std::optional<Rational> s0) {
  AlgebraBuilder b("sphere", s0);

  auto add_theta = [&](int p, const char* nm) {
    GeneratorInfo gi;
    gi.cls = "t";
    gi.idx = {p, 0};
    gi.grade = 1;
    gi.charge = p;
    gi.weight = 1;
    gi.name = nm;
    return b.add_generator(gi);
  };
  const GenId t0 = add_theta(0, "t(0)");
  const GenId tm2 = add_theta(-2, "t(-2)");
  const GenId tp2 = add_theta(2, "t(+2)");

  GenId uid[3][3];  // [i][charge index 1=+ 2=-]
  for (int i = 1; i <= 2; ++i) {
    for (int a : {+1, -1}) {
      GeneratorInfo gi;
      gi.cls = "u";
      gi.idx = {i, a};
      gi.grade = 0;
      gi.charge = a;
      gi.weight = 1;
      gi.name = std::string("u(") + std::to_string(i) + "," + (a > 0 ? "+" : "-") + ")";
      uid[i][charge_label(a)] = b.add_generator(gi);
    }
  }
  auto U = [&](int i, int a) { return uid[i][charge_label(a)]; };

  std::vector<RawRelation> rels;
  // Harmonic bilinears: eps_{ki} u^i_a u^k_b = eps_{ba} and
  // eps^{ba} u^i_a u^k_b = eps^{ki}.
  for (int a : {+1, -1}) {
    for (int bb : {+1, -1}) {
      RawRelation r;
      for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k) {
          QScalar c = epsilon_lower(k, i);
          if (!c.is_zero()) r.push_back({c, Word{U(i, a), U(k, bb)}});
        }
      QScalar rhs = epsilon_lower(charge_label(bb), charge_label(a));
      if (!rhs.is_zero()) r.push_back({-rhs, Word{}});
      rels.push_back(std::move(r));
    }
  }
  for (int i = 1; i <= 2; ++i) {
    for (int k = 1; k <= 2; ++k) {
      RawRelation r;
      for (int a : {+1, -1})
        for (int bb : {+1, -1}) {
          QScalar c = epsilon_upper(charge_label(bb), charge_label(a));
          if (!c.is_zero()) r.push_back({c, Word{U(i, a), U(k, bb)}});
        }
      QScalar rhs = epsilon_upper(k, i);
      if (!rhs.is_zero()) r.push_back({-rhs, Word{}});
      rels.push_back(std::move(r));
    }
  }
  // theta wedge relations.
  for (GenId t : {t0, tm2, tp2}) rels.push_back({{QScalar(1), Word{t, t}}});
  rels.push_back({{QScalar(1), Word{tp2, tm2}}, {QScalar::q_power(2), Word{tm2, tp2}}});
  rels.push_back({{QScalar(1), Word{tp2, t0}}, {QScalar::q_power(4), Word{t0, tp2}}});
  rels.push_back({{QScalar(1), Word{tm2, t0}}, {QScalar::q_power(-4), Word{t0, tm2}}});
  // theta-u pass-throughs: q^{+-2} t0 u = u t0 and q^{+-1} t(p) u = u t(p).
  for (int i = 1; i <= 2; ++i) {
    for (int a : {+1, -1}) {
      rels.push_back(
          {{QScalar::q_power(2 * a), Word{t0, U(i, a)}}, {QScalar(-1), Word{U(i, a), t0}}});
      for (GenId t : {tp2, tm2}) {
        rels.push_back(
            {{QScalar::q_power(a), Word{t, U(i, a)}}, {QScalar(-1), Word{U(i, a), t}}});
      }
    }
  }
  b.add_relations(rels, RewriteRule::Kind::Exchange);

  SphereAlgebra sph;
  sph.alg = b.build();

  GradedDerivation du(sph.alg, "du");
  // du u^i_+ = u^i_+ t0 + u^i_- t(+2);  du u^i_- = u^i_+ t(-2) - q^2 u^i_- t0
  for (int i = 1; i <= 2; ++i) {
    NCPoly plus(sph.alg.get());
    plus.add_term(Word{sph.u(i, +1), t0}, QScalar(1));
    plus.add_term(Word{sph.u(i, -1), tp2}, QScalar(1));
    du.set_image(sph.u(i, +1), plus);
    NCPoly minus(sph.alg.get());
    minus.add_term(Word{sph.u(i, +1), tm2}, QScalar(1));
    minus.add_term(Word{sph.u(i, -1), t0}, -QScalar::q_power(2));
    du.set_image(sph.u(i, -1), minus);
  }
  // Maurer-Cartan images.
  {
    NCPoly d0(sph.alg.get());
    d0.add_term(Word{tm2, tp2}, QScalar(-1));
    du.set_image(t0, d0);
    const QScalar mc = QScalar::q_power(2) * (QScalar(1) + QScalar::q_power(2));
    NCPoly dp(sph.alg.get());
    dp.add_term(Word{t0, tp2}, mc);
    du.set_image(tp2, dp);
    NCPoly dm(sph.alg.get());
    dm.add_term(Word{tm2, t0}, mc);
    du.set_image(tm2, dm);
  }
  sph.du = std::move(du);
  return sph;
}

ThetaProjection d_operators(const SphereAlgebra& sph, const NCPoly& p) {
  auto g = p.grade();
  if (!g || *g != 0) throw std::invalid_argument("d_operators: argument must have grade 0");
  return theta_project(sph.du.apply(p));
}

NCPoly delta_apply(const SphereAlgebra& sph, int which, const NCPoly& p) {
  const Algebra& A = *sph.alg;
  const GenId t0 = sph.theta(0), tm2 = sph.theta(-2), tp2 = sph.theta(2);
  const QScalar mc = QScalar::q_power(2) * (QScalar(1) + QScalar::q_power(2));
  const QScalar half(Rational(1, 2));

  // delta_a theta_b attribution: nilpotent split of the Maurer-Cartan images.
  auto delta_theta = [&](int which_a, GenId tb) -> NCPoly {
    NCPoly z(&A);
    if (which_a == 0) {
      if (tb == tp2) z.add_term(Word{t0, tp2}, mc);
      if (tb == tm2) return A.normal_form(NCPoly::term(A, mc, Word{tm2, t0}));
      return tb == t0 ? NCPoly(&A) : A.normal_form(z);
    }
    // delta (+2 channel, carried by t(-2)) and delta-bar share du t0 equally.
    if (tb == t0) z.add_term(Word{tm2, tp2}, -half);
    return A.normal_form(z);
  };
  const GenId carrier = (which == 0) ? t0 : (which == 2 ? tm2 : tp2);

  NCPoly out(&A);
  NCPoly p0(&A);                       // grade-0 part
  std::map<GenId, NCPoly> by_theta;    // theta-leading grade-1 parts
  const NCPoly pn = A.normal_form(p);
  for (const auto& [w, c] : pn.terms()) {
    const int gr = A.word_grade(w);
    if (gr == 0) {
      p0.add_term(w, c);
    } else if (gr == 1 && !w.empty() && (w[0] == t0 || w[0] == tm2 || w[0] == tp2)) {
      Word rest(w.begin() + 1, w.end());
      by_theta[w[0]].add_term(rest, c);
    } else {
      throw std::invalid_argument("delta_apply: unsupported shape " + A.word_str(w));
    }
  }
  if (!p0.is_zero()) {
    ThetaProjection d = theta_project(sph.du.apply(p0));
    const NCPoly& comp = (which == 0) ? d.c0 : (which == 2 ? d.cP2 : d.cM2);
    out += A.normal_form(NCPoly::gen(A, carrier) * comp);
  }
  for (auto& [tb, gpart] : by_theta) {
    // delta_a(theta_b g) = (delta_a theta_b) g - theta_b theta_a (D_a g)
    ThetaProjection d = theta_project(sph.du.apply(gpart));
    const NCPoly& Dg = (which == 0) ? d.c0 : (which == 2 ? d.cP2 : d.cM2);
    out += A.normal_form(delta_theta(which, tb) * gpart);
    out -= A.normal_form(NCPoly::gen(A, tb) * NCPoly::gen(A, carrier) * Dg);
  }
  return A.normal_form(out);
}

HarmonicPolynomial build_phi(const SphereAlgebra& sph, int r, int s) {
  if (r + s < 1) throw std::invalid_argument("build_phi: r+s must be >= 1");
  const int n = r + s;
  const Algebra& A = *sph.alg;

  using Family = std::map<std::vector<int>, NCPoly>;
  Family raw;
  std::vector<int> idx(n, 1);
  for (;;) {
    Word w;
    for (int j = 0; j < n; ++j) w.push_back(sph.u(idx[j], j < r ? +1 : -1));
    raw[idx] = A.normal_form(NCPoly::term(A, QScalar(1), w));
    int j = n - 1;
    while (j >= 0 && idx[j] == 2) idx[j--] = 1;
    if (j < 0) break;
    ++idx[j];
  }

  // Hecke symmetrizer: S_n = sum_w q^{l(w)} T_w / sum_w q^{2 l(w)},
  // T_i = R acting on adjacent index slots.
  auto apply_T = [&](const Family& f, int slot) {
    Family out;
    for (const auto& [ix, val] : f) {
      for (int l = 1; l <= 2; ++l)
        for (int m = 1; m <= 2; ++m) {
          QScalar c = r_matrix(ix[slot], ix[slot + 1], l, m);
          if (A.specialization()) c = c.specialized(*A.specialization());
          if (c.is_zero()) continue;
          std::vector<int> jx = ix;
          jx[slot] = l;
          jx[slot + 1] = m;
          auto& acc = out[ix];
          if (!acc.algebra()) acc = NCPoly(&A);
          acc.add_scaled(f.at(jx), c);
        }
    }
    return out;
  };

  // Enumerate permutations with lengths via bubble words.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Family acc;
  QScalar denom;
  std::function<std::vector<int>(std::vector<int>)> bubble_word = [&](std::vector<int> p) {
    std::vector<int> word;
    for (;;) {
      bool done = true;
      for (int i = 0; i + 1 < n; ++i) {
        if (p[i] > p[i + 1]) {
          std::swap(p[i], p[i + 1]);
          word.push_back(i);
          done = false;
        }
      }
      if (done) break;
    }
    std::reverse(word.begin(), word.end());
    return word;
  };
  std::sort(perm.begin(), perm.end());
  do {
    const std::vector<int> w = bubble_word(perm);
    QScalar coeff = QScalar::q_power(static_cast<int>(w.size()));
    if (A.specialization()) coeff = coeff.specialized(*A.specialization());
    Family tw = raw;
    for (int slot : w) tw = apply_T(tw, slot);
    for (auto& [ix, val] : tw) {
      auto it = acc.find(ix);
      if (it == acc.end()) {
        NCPoly z(&A);
        z.add_scaled(val, coeff);
        acc.emplace(ix, std::move(z));
      } else {
        it->second.add_scaled(val, coeff);
      }
    }
    QScalar d2 = QScalar::q_power(2 * static_cast<int>(w.size()));
    if (A.specialization()) d2 = d2.specialized(*A.specialization());
    denom += d2;
  } while (std::next_permutation(perm.begin(), perm.end()));

  HarmonicPolynomial phi;
  phi.r = r;
  phi.s = s;
  const QScalar inv = denom.inverse();
  for (auto& [ix, val] : acc) phi.components[ix] = A.normal_form(val * inv);
  return phi;
}

bool phi_is_symmetric(const SphereAlgebra& sph, const HarmonicPolynomial& phi) {
  const Algebra& A = *sph.alg;
  const int n = phi.r + phi.s;
  for (int slot = 0; slot + 1 < n; ++slot) {
    for (const auto& [ix, val] : phi.components) {
      NCPoly proj(&A);
      for (int l = 1; l <= 2; ++l)
        for (int m = 1; m <= 2; ++m) {
          QScalar c = projector(+1).at({ix[slot], ix[slot + 1], l, m});
          if (A.specialization()) c = c.specialized(*A.specialization());
          if (c.is_zero()) continue;
          std::vector<int> jx = ix;
          jx[slot] = l;
          jx[slot + 1] = m;
          proj.add_scaled(phi.components.at(jx), c);
        }
      if (!(A.normal_form(proj) == val)) return false;
    }
  }
  return true;
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

// All grade-0 harmonic monomials of degree == deg, every index choice.
std::vector<Word> u_monomials(const SphereAlgebra& sph, int deg) {
  std::vector<Word> out{{}};
  std::vector<GenId> letters;
  for (int i = 1; i <= 2; ++i)
    for (int a : {+1, -1}) letters.push_back(sph.u(i, a));
  for (int d = 0; d < deg; ++d) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (GenId l : letters) {
        Word nw = w;
        nw.push_back(l);
        next.push_back(std::move(nw));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<CheckResult> verify_sphere_relations(const SphereAlgebra& sph) {
  const Algebra& A = *sph.alg;
  std::vector<CheckResult> out;

  // All 8 component equations of the harmonic bilinear system.
  {
    NCPoly worst(&A);
    for (int a : {+1, -1})
      for (int bb : {+1, -1}) {
        NCPoly acc(&A);
        for (int i = 1; i <= 2; ++i)
          for (int k = 1; k <= 2; ++k)
            acc.add_scaled(sph.upoly(i, a) * sph.upoly(k, bb), epsilon_lower(k, i));
        acc.add_term(Word{}, -epsilon_lower(bb > 0 ? 1 : 2, a > 0 ? 1 : 2));
        NCPoly nf = A.normal_form(acc);
        if (!nf.is_zero() && worst.is_zero()) worst = nf;
      }
    out.push_back(zero_check("sphere/bilinear-lower", "harmonic-bilinear", worst));
  }
  {
    NCPoly worst(&A);
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k) {
        NCPoly acc(&A);
        for (int a : {+1, -1})
          for (int bb : {+1, -1})
            acc.add_scaled(sph.upoly(i, a) * sph.upoly(k, bb),
                           epsilon_upper(bb > 0 ? 1 : 2, a > 0 ? 1 : 2));
        acc.add_term(Word{}, -epsilon_upper(k, i));
        NCPoly nf = A.normal_form(acc);
        if (!nf.is_zero() && worst.is_zero()) worst = nf;
      }
    out.push_back(zero_check("sphere/bilinear-upper", "harmonic-bilinear", worst));
  }
  // ubar is the two-sided inverse.
  {
    NCPoly worst(&A);
    for (int a : {+1, -1})
      for (int bb : {+1, -1}) {
        NCPoly acc(&A);
        for (int i = 1; i <= 2; ++i) acc += sph.ubar(a, i) * sph.upoly(i, bb);
        if (a == bb) acc.add_term(Word{}, QScalar(-1));
        NCPoly nf = A.normal_form(acc);
        if (!nf.is_zero() && worst.is_zero()) worst = nf;
      }
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k) {
        NCPoly acc(&A);
        for (int a : {+1, -1}) acc += sph.upoly(i, a) * sph.ubar(a, k);
        if (i == k) acc.add_term(Word{}, QScalar(-1));
        NCPoly nf = A.normal_form(acc);
        if (!nf.is_zero() && worst.is_zero()) worst = nf;
      }
    out.push_back(zero_check("sphere/ubar-inverse", "inverse-harmonics", worst));
  }
  // Quantum determinant of u equals 1 and du kills it.
  {
    // D(u) = -q/(1+q^2) eps_{ki} eps^{ml} u^i_l u^k_m over the U(1) labels.
    NCPoly det(&A);
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int l : {+1, -1})
          for (int m : {+1, -1}) {
            QScalar c = epsilon_lower(k, i) * epsilon_upper(m > 0 ? 1 : 2, l > 0 ? 1 : 2);
            if (c.is_zero()) continue;
            det.add_term(Word{sph.u(i, l), sph.u(k, m)}, c);
          }
    const QScalar pref = -QScalar::q_power(1) / (QScalar(1) + QScalar::q_power(2));
    det = det * pref;
    NCPoly one = NCPoly::unit(A);
    out.push_back(zero_check("sphere/qdet-one", "quantum-determinant",
                             A.normal_form(det - one)));
    // Independent short form: u1+ u2- - q u1- u2+ = 1.
    NCPoly short_det(&A);
    short_det.add_term(Word{sph.u(1, +1), sph.u(2, -1)}, QScalar(1));
    short_det.add_term(Word{sph.u(1, -1), sph.u(2, +1)}, -QScalar::q_power(1));
    out.push_back(zero_check("sphere/qdet-short", "quantum-determinant",
                             A.normal_form(short_det - one)));
    out.push_back(zero_check("sphere/qdet-closed", "quantum-determinant",
                             sph.du.apply(det - one)));
  }
  return out;
}

std::vector<CheckResult> verify_lie_algebra(const SphereAlgebra& sph, int maxdeg) {
  const Algebra& A = *sph.alg;
  std::vector<CheckResult> out;
  const QScalar q2 = QScalar::q_power(2), q4 = QScalar::q_power(4);
  const QScalar mc = q2 * (QScalar(1) + q2);

  auto D = [&](int which, const NCPoly& f) {
    ThetaProjection t = d_operators(sph, f);
    return which == 0 ? t.c0 : (which == 2 ? t.cP2 : t.cM2);
  };

  NCPoly worst1(&A), worst2(&A), worst3(&A), worst_eig(&A);
  for (int deg = 1; deg <= maxdeg; ++deg) {
    for (const Word& w : u_monomials(sph, deg)) {
      NCPoly f = A.normal_form(NCPoly::term(A, QScalar(1), w));
      NCPoly r1 = A.normal_form(q2 * D(2, D(-2, f)) - D(-2, D(2, f)) - D(0, f));
      NCPoly r2 = A.normal_form(D(0, D(2, f)) - q4 * D(2, D(0, f)) - mc * D(2, f));
      NCPoly r3 = A.normal_form(D(-2, D(0, f)) - q4 * D(0, D(-2, f)) - mc * D(-2, f));
      if (!r1.is_zero() && worst1.is_zero()) worst1 = r1;
      if (!r2.is_zero() && worst2.is_zero()) worst2 = r2;
      if (!r3.is_zero() && worst3.is_zero()) worst3 = r3;
      // D0 eigenvalue on charge-p monomials: q^2 (1-q^{2p})/(1-q^2).
      const int p = A.word_charge(w);
      QScalar eig;
      if (p != 0) {
        // polynomial form of q^2 (1-q^{2p})/(1-q^2), exact at every s
        QScalar geom;
        if (p > 0) {
          for (int j = 0; j < p; ++j) geom += QScalar::q_power(2 * j);
        } else {
          for (int j = p; j < 0; ++j) geom -= QScalar::q_power(2 * j);
        }
        eig = q2 * geom;
        if (A.specialization()) eig = eig.specialized(*A.specialization());
      }
      NCPoly re = A.normal_form(D(0, f) - eig * f);
      if (!re.is_zero() && worst_eig.is_zero()) worst_eig = re;
    }
  }
  out.push_back(zero_check("sphere/lie-1", "deformed-lie-algebra", worst1));
  out.push_back(zero_check("sphere/lie-2", "deformed-lie-algebra", worst2));
  out.push_back(zero_check("sphere/lie-3", "deformed-lie-algebra", worst3));
  out.push_back(zero_check("sphere/d0-eigenvalue", "charge-grading", worst_eig));
  return out;
}

std::vector<CheckResult> verify_maurer_cartan(const SphereAlgebra& sph, int maxlen, bool corrupt) {
  const Algebra& A = *sph.alg;
  std::vector<CheckResult> out;
  const GenId t0 = sph.theta(0), tm2 = sph.theta(-2), tp2 = sph.theta(2);
  QScalar mc = QScalar::q_power(2) * (QScalar(1) + QScalar::q_power(2));
  if (corrupt) mc = QScalar::q_power(1) * (QScalar(1) + QScalar::q_power(2));
  if (A.specialization()) mc = mc.specialized(*A.specialization());

  GradedDerivation du = sph.du;
  if (corrupt) {
    du = GradedDerivation(sph.alg, "du-corrupt");
    for (GenId g = 0; g < A.gen_count(); ++g) {
      if (g == tp2) {
        NCPoly dp(&A);
        dp.add_term(Word{t0, tp2}, mc);
        du.set_image(g, dp);
      } else {
        du.set_image(g, sph.du.image(g));
      }
    }
  }

  // Structure equations with the exact coefficient q^2(1+q^2).
  {
    NCPoly lhs = du.apply(sph.tpoly(0)) + A.normal_form(sph.tpoly(-2) * sph.tpoly(2));
    out.push_back(zero_check("sphere/mc-theta0", "maurer-cartan", A.normal_form(lhs)));
    const QScalar mc_true = QScalar::q_power(2) * (QScalar(1) + QScalar::q_power(2));
    NCPoly lp = du.apply(sph.tpoly(2)) - A.normal_form(sph.tpoly(0) * sph.tpoly(2)) * mc_true;
    out.push_back(zero_check("sphere/mc-thetap2", "maurer-cartan", A.normal_form(lp)));
    NCPoly lm = du.apply(sph.tpoly(-2)) - A.normal_form(sph.tpoly(-2) * sph.tpoly(0)) * mc_true;
    out.push_back(zero_check("sphere/mc-thetam2", "maurer-cartan", A.normal_form(lm)));
  }
  // Nilpotency on generators and on all words up to maxlen.
  {
    NCPoly worst(&A);
    std::vector<GenId> letters;
    for (GenId g = 0; g < A.gen_count(); ++g) letters.push_back(g);
    std::vector<Word> words{{}};
    for (int d = 0; d < maxlen; ++d) {
      std::vector<Word> next;
      for (const auto& w : words)
        for (GenId l : letters) {
          Word nw = w;
          nw.push_back(l);
          next.push_back(std::move(nw));
        }
      for (const auto& w : next) {
        NCPoly f = A.normal_form(NCPoly::term(A, QScalar(1), w));
        NCPoly dd = du.apply(du.apply(f));
        if (!dd.is_zero() && worst.is_zero()) worst = dd;
      }
      words = std::move(next);
      if (!worst.is_zero()) break;  // report the first witness
    }
    out.push_back(zero_check("sphere/du-nilpotent", "nilpotency", worst));
  }
  // Anticommutator identity of the three delta operators on monomials of
  // degree <= 3 (each delta realized via the theta decomposition).
  if (!corrupt) {
    NCPoly worst(&A);
    for (int deg = 1; deg <= 3; ++deg) {
      for (const Word& w : u_monomials(sph, deg)) {
        NCPoly f = A.normal_form(NCPoly::term(A, QScalar(1), w));
        NCPoly sum(&A);
        const int chans[3] = {0, 2, -2};
        for (int ai = 0; ai < 3; ++ai)
          for (int bi = ai + 1; bi < 3; ++bi) {
            sum += delta_apply(sph, chans[ai], delta_apply(sph, chans[bi], f));
            sum += delta_apply(sph, chans[bi], delta_apply(sph, chans[ai], f));
          }
        sum = A.normal_form(sum);
        if (!sum.is_zero() && worst.is_zero()) worst = sum;
      }
    }
    out.push_back(zero_check("sphere/delta-anticommutators", "delta-anticommutators", worst));
  }
  // The six operator equations for the delta actions on harmonics, as
  // commutators applied to a basis of test monomials.
  if (!corrupt) {
    NCPoly worst(&A);
    std::vector<NCPoly> tests;
    for (int deg = 0; deg <= 2; ++deg)
      for (const Word& w : u_monomials(sph, deg))
        tests.push_back(A.normal_form(NCPoly::term(A, QScalar(1), w)));
    for (int i = 1; i <= 2; ++i) {
      for (const NCPoly& g : tests) {
        auto comm = [&](int which, const NCPoly& up) {
          return A.normal_form(delta_apply(sph, which, A.normal_form(up * g)) -
                               A.normal_form(up * delta_apply(sph, which, g)));
        };
        const NCPoly up = sph.upoly(i, +1), um = sph.upoly(i, -1);
        NCPoly e1 = comm(0, up) - A.normal_form(up * sph.tpoly(0) * g);
        NCPoly e2 = comm(2, up);
        NCPoly e3 = comm(-2, up) - A.normal_form(um * sph.tpoly(2) * g);
        NCPoly e4 = comm(0, um) + A.normal_form(sph.tpoly(0) * um * g);
        NCPoly e5 = comm(2, um) - A.normal_form(up * sph.tpoly(-2) * g);
        NCPoly e6 = comm(-2, um);
        for (NCPoly* e : {&e1, &e2, &e3, &e4, &e5, &e6}) {
          NCPoly nf = A.normal_form(*e);
          if (!nf.is_zero() && worst.is_zero()) worst = nf;
        }
      }
    }
    out.push_back(zero_check("sphere/delta-harmonic-action", "delta-harmonic-action", worst));
  }
  return out;
}

}  // namespace qgv

#include "qgv/ncalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace qgv {

namespace {
uint32_t pair_key(GenId a, GenId b) { return (static_cast<uint32_t>(a) << 16) | b; }
}  // namespace

// ---------------------------------------------------------------------------
// NCPoly

NCPoly NCPoly::unit(const Algebra& a) {
  NCPoly p(&a);
  p.terms_[Word{}] = QScalar(1);
  return p;
}

NCPoly NCPoly::gen(const Algebra& a, GenId g) {
  NCPoly p(&a);
  p.terms_[Word{g}] = QScalar(1);
  return p;
}

NCPoly NCPoly::term(const Algebra& a, QScalar c, Word w) {
  NCPoly p(&a);
  p.add_term(w, c);
  return p;
}

void NCPoly::require_same(const NCPoly& o) const {
  if (alg_ && o.alg_ && alg_ != o.alg_) {
    throw std::invalid_argument("NCPoly: operands belong to different algebras");
  }
}

namespace {
// Coefficients entering a specialized algebra are evaluated at its s0, so
// generic constants and specialized rule output mix consistently.
QScalar adapt_coeff(const Algebra* alg, const QScalar& c) {
  if (alg && alg->specialization() && !c.is_rational_constant()) {
    return c.specialized(*alg->specialization());
  }
  return c;
}
}  // namespace

void NCPoly::add_term(const Word& w, const QScalar& c) {
  const QScalar cc = adapt_coeff(alg_, c);
  if (cc.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, cc);
    return;
  }
  it->second += cc;
  if (it->second.is_zero()) terms_.erase(it);
}

void NCPoly::add_scaled(const NCPoly& p, const QScalar& c) {
  require_same(p);
  if (!alg_) alg_ = p.alg_;
  const QScalar cc = adapt_coeff(alg_, c);
  if (cc.is_zero()) return;
  for (const auto& [w, v] : p.terms_) add_term(w, v * cc);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r(*this);
  r.add_scaled(o, QScalar(1));
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r(*this);
  r.add_scaled(o, QScalar(-1));
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  add_scaled(o, QScalar(1));
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  add_scaled(o, QScalar(-1));
  return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  require_same(o);
  NCPoly r(alg_ ? alg_ : o.alg_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) {
      Word w;
      w.reserve(w1.size() + w2.size());
      w.insert(w.end(), w1.begin(), w1.end());
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  }
  return r;
}

NCPoly NCPoly::operator*(const QScalar& c) const {
  NCPoly r(alg_);
  const QScalar cc = adapt_coeff(alg_, c);
  if (cc.is_zero()) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * cc);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r(alg_);
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, -v);
  return r;
}

std::optional<int> NCPoly::grade() const {
  if (!alg_) return std::nullopt;
  std::optional<int> g;
  for (const auto& [w, v] : terms_) {
    int wg = alg_->word_grade(w);
    if (g && *g != wg) return std::nullopt;
    g = wg;
  }
  return terms_.empty() ? std::optional<int>(0) : g;
}

std::optional<int> NCPoly::charge() const {
  if (!alg_) return std::nullopt;
  std::optional<int> g;
  for (const auto& [w, v] : terms_) {
    int wc = alg_->word_charge(w);
    if (g && *g != wc) return std::nullopt;
    g = wc;
  }
  return terms_.empty() ? std::optional<int>(0) : g;
}

std::string NCPoly::str(ScalarStyle style) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Word, QScalar>*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& t : terms_) ordered.push_back(&t);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first < b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : ordered) {
    const Word& w = t->first;
    QScalar c = t->second;
    const int sg = c.sign();
    if (first) {
      if (sg < 0) os << "-";
    } else {
      os << (sg < 0 ? " - " : " + ");
    }
    if (sg < 0) c = -c;
    first = false;
    std::string ws = alg_ ? alg_->word_str(w) : std::string("?");
    if (w.empty()) {
      os << c.str(style);
    } else if (c.is_one()) {
      os << ws;
    } else {
      os << c.str(style) << "*" << ws;
    }
  }
  return os.str();
}

size_t NCPoly::approx_bytes() const {
  size_t n = sizeof(*this);
  for (const auto& [w, v] : terms_) {
    n += 64 + 2 * w.size() + 16 * v.term_count();
  }
  return n;
}

// ---------------------------------------------------------------------------
// Algebra

std::optional<GenId> Algebra::find(const std::string& cls, int i0, int i1) const {
  auto it = lookup_.find({cls, {i0, i1}});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

GenId Algebra::need(const std::string& cls, int i0, int i1) const {
  auto g = find(cls, i0, i1);
  if (!g) {
    throw std::invalid_argument("unknown generator " + cls + "(" + std::to_string(i0) + "," +
                                std::to_string(i1) + ") in algebra " + name_);
  }
  return *g;
}

std::vector<GenId> Algebra::by_class(const std::string& cls) const {
  std::vector<GenId> out;
  for (GenId g = 0; g < gens_.size(); ++g) {
    if (gens_[g].cls == cls) out.push_back(g);
  }
  return out;
}

int Algebra::word_weight(const Word& w) const {
  int s = 0;
  for (GenId g : w) s += gens_[g].weight;
  return s;
}

int Algebra::word_grade(const Word& w) const {
  int s = 0;
  for (GenId g : w) s += gens_[g].grade;
  return s;
}

int Algebra::word_charge(const Word& w) const {
  int s = 0;
  for (GenId g : w) s += gens_[g].charge;
  return s;
}

bool Algebra::less_words(const Word& a, const Word& b) const {
  const int wa = word_weight(a), wb = word_weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const RewriteRule* Algebra::rule(GenId a, GenId b) const {
  auto it = rule_index_.find(pair_key(a, b));
  if (it == rule_index_.end()) return nullptr;
  return &rule_list_[it->second];
}

bool Algebra::pair_allowed(GenId a, GenId b) const {
  if (a <= b) return true;
  return allowed_pairs_.count(pair_key(a, b)) > 0;
}

bool Algebra::pair_is_boundary(GenId a, GenId b) const {
  return boundary_pairs_.count(pair_key(a, b)) > 0;
}

std::string Algebra::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << gens_[w[i]].name;
  }
  return os.str();
}

int Algebra::find_redex(const Word& w, Strategy st) const {
  if (w.size() < 2) return -1;
  const int n = static_cast<int>(w.size()) - 1;
  for (int k = 0; k < n; ++k) {
    const int i = (st == Strategy::Leftmost) ? k : n - 1 - k;
    if (rule(w[i], w[i + 1]) != nullptr) return i;
  }
  // No redex: every adjacent pair must be in normal position.
  for (int i = 0; i < n; ++i) {
    if (pair_is_boundary(w[i], w[i + 1])) {
      throw std::runtime_error("inverse tower exhausted at (" + gens_[w[i]].name + ", " +
                               gens_[w[i + 1]].name + ") in algebra " + name_ +
                               ": raise the tower span");
    }
    if (!pair_allowed(w[i], w[i + 1])) {
      throw std::runtime_error("unreducible adjacent pair (" + gens_[w[i]].name + ", " +
                               gens_[w[i + 1]].name + ") in algebra " + name_ +
                               ": incomplete rule set");
    }
  }
  return -1;
}

NCPoly Algebra::normal_form(const NCPoly& p, Strategy st) const {
  if (p.algebra() && p.algebra() != this) {
    throw std::invalid_argument("normal_form: polynomial belongs to a different algebra");
  }
  NCPoly out(this);
  for (const auto& [w, c] : p.terms()) {
    for (GenId g : w) {
      if (g >= gens_.size()) throw std::invalid_argument("normal_form: unknown generator id");
    }
    NCPoly nf = word_nf(w, st, 0);
    out.add_scaled(nf, c);
  }
  return out;
}

NCPoly Algebra::word_nf(const Word& w, Strategy st, int depth) const {
  if (depth > 200000) throw std::runtime_error("normal_form: reduction depth exceeded");
  if (!w.empty() && gens_[w.back()].annihilates_right) return NCPoly(this);
  const int slot = (st == Strategy::Leftmost) ? 0 : 1;
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_[slot].find(w);
    if (it != memo_[slot].end()) return it->second;
  }
  const int pos = find_redex(w, st);
  NCPoly acc(this);
  if (pos < 0) {
    acc.add_term(w, QScalar(1));
  } else {
    const RewriteRule* r = rule(w[pos], w[pos + 1]);
    for (const auto& [rw, rc] : r->rhs.terms()) {
      Word nw;
      nw.reserve(w.size() - 2 + rw.size());
      nw.insert(nw.end(), w.begin(), w.begin() + pos);
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      NCPoly sub = word_nf(nw, st, depth + 1);
      acc.add_scaled(sub, rc);
    }
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (memo_cap_bytes_ > 0 && memo_bytes_ > memo_cap_bytes_) {
      memo_[0].clear();
      memo_[1].clear();
      memo_bytes_ = 0;
    }
    memo_bytes_ += acc.approx_bytes() + 2 * w.size() + 48;
    memo_[slot].emplace(w, acc);
  }
  return acc;
}

void Algebra::clear_memo() const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_[0].clear();
  memo_[1].clear();
  memo_bytes_ = 0;
}

ConfluenceReport Algebra::check_local_confluence() const {
  ConfluenceReport rep;
  const GenId n = static_cast<GenId>(gens_.size());
  for (GenId a = 0; a < n; ++a) {
    for (GenId b = 0; b < n; ++b) {
      if (rule(a, b) == nullptr && !pair_allowed(a, b)) {
        rep.issues.push_back({Word{a, b}, "descending pair without a rule: (" + gens_[a].name +
                                              ", " + gens_[b].name + ")"});
      }
    }
  }
  for (GenId a = 0; a < n; ++a) {
    for (GenId b = 0; b < n; ++b) {
      const RewriteRule* r_ab = rule(a, b);
      for (GenId c = 0; c < n; ++c) {
        ++rep.words_checked;
        const RewriteRule* r_bc = rule(b, c);
        if (r_ab == nullptr || r_bc == nullptr) continue;
        ++rep.critical_pairs;
        const Word w{a, b, c};
        try {
          // Path A: rewrite (a,b) first.
          NCPoly pa(this);
          for (const auto& [rw, rc] : r_ab->rhs.terms()) {
            Word nw(rw);
            nw.push_back(c);
            pa.add_scaled(word_nf(nw, Strategy::Leftmost, 0), rc);
          }
          // Path B: rewrite (b,c) first.
          NCPoly pb(this);
          for (const auto& [rw, rc] : r_bc->rhs.terms()) {
            Word nw{a};
            nw.insert(nw.end(), rw.begin(), rw.end());
            pb.add_scaled(word_nf(nw, Strategy::Leftmost, 0), rc);
          }
          if (!(pa == pb)) {
            rep.issues.push_back(
                {w, "critical pair does not join: " + word_str(w) + " -> [" +
                        pa.str() + "] vs [" + pb.str() + "]"});
          }
        } catch (const std::exception& e) {
          rep.issues.push_back({w, std::string("reduction error on ") + word_str(w) + ": " +
                                       e.what()});
        }
      }
    }
  }
  return rep;
}

ConfluenceReport Algebra::random_word_agreement(int count, int maxlen, uint64_t seed) const {
  ConfluenceReport rep;
  std::mt19937_64 rng(seed);
  const GenId n = static_cast<GenId>(gens_.size());
  for (int t = 0; t < count; ++t) {
    const int len = 1 + static_cast<int>(rng() % static_cast<uint64_t>(maxlen));
    Word w;
    w.reserve(len);
    for (int i = 0; i < len; ++i) w.push_back(static_cast<GenId>(rng() % n));
    ++rep.words_checked;
    try {
      NCPoly l = word_nf(w, Strategy::Leftmost, 0);
      NCPoly r = word_nf(w, Strategy::Rightmost, 0);
      if (!(l == r)) {
        rep.issues.push_back({w, "leftmost/rightmost normal forms differ on " + word_str(w)});
      }
    } catch (const std::exception& e) {
      rep.issues.push_back({w, std::string("reduction error on ") + word_str(w) + ": " + e.what()});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// AlgebraBuilder

AlgebraBuilder::AlgebraBuilder(std::string name, std::optional<Rational> s0) {
  alg_ = std::shared_ptr<Algebra>(new Algebra());
  alg_->name_ = std::move(name);
  alg_->s0_ = std::move(s0);
  if (const char* cap = std::getenv("QGV_MEMO_BYTES")) {
    alg_->memo_cap_bytes_ = static_cast<size_t>(std::strtoull(cap, nullptr, 10));
  }
}

GenId AlgebraBuilder::add_generator(GeneratorInfo info) {
  if (built_) throw std::logic_error("AlgebraBuilder: already built");
  if (info.weight < 0) throw std::invalid_argument("generator weight must be >= 0");
  const GenId id = static_cast<GenId>(alg_->gens_.size());
  alg_->lookup_[{info.cls, info.idx}] = id;
  alg_->gens_.push_back(std::move(info));
  return id;
}

GenId AlgebraBuilder::need(const std::string& cls, int i0, int i1) const {
  return alg_->need(cls, i0, i1);
}

QScalar AlgebraBuilder::adapt(const QScalar& v) const {
  if (!alg_->s0_) return v;
  return v.specialized(*alg_->s0_);
}

void AlgebraBuilder::validate_rule(const RewriteRule& r) const {
  const Word lhs{r.a, r.b};
  const int lg = alg_->word_grade(lhs), lc = alg_->word_charge(lhs);
  for (const auto& [w, c] : r.rhs.terms()) {
    if (alg_->word_grade(w) != lg || alg_->word_charge(w) != lc) {
      throw std::logic_error("rule " + alg_->word_str(lhs) + " -> " + r.rhs.str() +
                             " violates grade/charge conservation");
    }
    if (!alg_->less_words(w, lhs)) {
      throw std::logic_error("rule " + alg_->word_str(lhs) + " -> " + r.rhs.str() +
                             " is not decreasing in the word order (term " + alg_->word_str(w) +
                             ")");
    }
  }
}

void AlgebraBuilder::add_rule(GenId a, GenId b, const RawRelation& rhs, RewriteRule::Kind kind) {
  if (built_) throw std::logic_error("AlgebraBuilder: already built");
  RewriteRule r;
  r.a = a;
  r.b = b;
  r.kind = kind;
  r.rhs = NCPoly(alg_.get());
  for (const auto& [c, w] : rhs) r.rhs.add_term(w, adapt(c));
  validate_rule(r);
  const uint32_t key = pair_key(a, b);
  if (alg_->rule_index_.count(key)) {
    throw std::logic_error("duplicate rule for pair (" + alg_->gens_[a].name + ", " +
                           alg_->gens_[b].name + ")");
  }
  alg_->rule_index_[key] = alg_->rule_list_.size();
  alg_->rule_list_.push_back(std::move(r));
}

void AlgebraBuilder::allow_pair(GenId a, GenId b) {
  alg_->allowed_pairs_.insert(pair_key(a, b));
}

void AlgebraBuilder::mark_boundary(GenId a, GenId b) {
  alg_->boundary_pairs_.insert(pair_key(a, b));
  alg_->allowed_pairs_.insert(pair_key(a, b));
}

void AlgebraBuilder::add_relations(const std::vector<RawRelation>& rels, RewriteRule::Kind kind) {
  if (rels.empty()) return;
  // Collect all words (each of length <= 2) and sort them descending.
  std::vector<Word> cols;
  for (const auto& rel : rels) {
    for (const auto& [c, w] : rel) {
      if (w.size() > 2) throw std::invalid_argument("add_relations: word longer than 2");
      if (std::find(cols.begin(), cols.end(), w) == cols.end()) cols.push_back(w);
    }
  }
  std::sort(cols.begin(), cols.end(),
            [this](const Word& a, const Word& b) { return alg_->less_words(b, a); });
  std::map<Word, size_t> col_of;
  for (size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;

  // Homogeneity check per relation, then build the matrix.
  std::vector<std::vector<QScalar>> m;
  for (const auto& rel : rels) {
    std::optional<int> g, ch;
    std::vector<QScalar> row(cols.size());
    bool nonzero = false;
    for (const auto& [c, w] : rel) {
      QScalar cc = adapt(c);
      if (cc.is_zero()) continue;
      const int wg = alg_->word_grade(w), wc = alg_->word_charge(w);
      if (g && (*g != wg || *ch != wc)) {
        throw std::logic_error("add_relations: inhomogeneous relation");
      }
      g = wg;
      ch = wc;
      row[col_of[w]] += cc;
      nonzero = true;
    }
    if (nonzero) m.push_back(std::move(row));
  }

  // Exact RREF, pivots on the largest (leftmost) columns.
  size_t prow = 0;
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  for (size_t col = 0; col < cols.size() && prow < m.size(); ++col) {
    size_t sel = prow;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[prow]);
    const QScalar inv = m[prow][col].inverse();
    for (auto& x : m[prow]) x *= inv;
    for (size_t r2 = 0; r2 < m.size(); ++r2) {
      if (r2 == prow || m[r2][col].is_zero()) continue;
      const QScalar f = m[r2][col];
      for (size_t j = col; j < cols.size(); ++j) m[r2][j] -= f * m[prow][j];
    }
    pivots.emplace_back(prow, col);
    ++prow;
  }

  for (const auto& [r2, col] : pivots) {
    const Word& lhs = cols[col];
    if (lhs.size() != 2) {
      throw std::logic_error("add_relations: pivot word " + alg_->word_str(lhs) +
                             " has length != 2 (relation forces a generator)");
    }
    RawRelation rhs;
    for (size_t j = col + 1; j < cols.size(); ++j) {
      if (!m[r2][j].is_zero()) rhs.emplace_back(-m[r2][j], cols[j]);
    }
    add_rule(lhs[0], lhs[1], rhs, kind);
  }
}

int AlgebraBuilder::pass_exponent(GenId scaled, GenId h) const {
  // scaled * h = q^sigma h * scaled, read off the installed normalization rule.
  const Algebra& A = *alg_;
  auto read_rule = [&](GenId a, GenId b, GenId wa, GenId wb,
                       bool invert) -> std::optional<int> {
    const RewriteRule* r = A.rule(a, b);
    if (!r || r->rhs.term_count() != 1) return std::nullopt;
    const auto& [w, c] = *r->rhs.terms().begin();
    if (w != Word{wa, wb}) return std::nullopt;
    // c must be a pure power of s: c = s^k; probe small |k| first so the
    // minimal twist is selected when powers collapse under specialization.
    QScalar probe = c;
    for (int a2 = 0; a2 <= 64; ++a2) {
      for (int k : {a2, -a2}) {
        QScalar cand = QScalar::s_power(k);
        if (A.specialization()) cand = cand.specialized(*A.specialization());
        if (probe == cand) {
          if (k % 2 != 0) return std::nullopt;
          return invert ? -k / 2 : k / 2;
        }
        if (a2 == 0) break;
      }
    }
    return std::nullopt;
  };
  if (h > scaled) {
    // rule (h, scaled): h*scaled -> q^{-sigma} scaled*h
    auto e = read_rule(h, scaled, scaled, h, true);
    if (e) return *e;
  } else if (h < scaled) {
    // rule (scaled, h): scaled*h -> q^{sigma} h*scaled
    auto e = read_rule(scaled, h, h, scaled, false);
    if (e) return *e;
  } else {
    return 0;
  }
  throw std::logic_error("define_inverse: element is not central up to scaling against " +
                         A.gens_[h].name);
}

std::vector<GenId> AlgebraBuilder::define_inverse(const std::string& cls, GenId scaled,
                                                  std::optional<GenId> constant, int span,
                                                  const std::vector<std::string>& skip_classes) {
  const size_t old_count = alg_->gens_.size();
  auto skipped = [&](const GeneratorInfo& gi) {
    return std::find(skip_classes.begin(), skip_classes.end(), gi.cls) != skip_classes.end();
  };

  // Shift exponents per existing generator; validates centrality-up-to-scaling.
  std::vector<int> sigma(old_count, 0);
  for (GenId h = 0; h < old_count; ++h) {
    if (h == scaled || (constant && h == *constant)) continue;
    if (skipped(alg_->gens_[h])) continue;
    sigma[h] = pass_exponent(scaled, h);
    if (constant) {
      // The constant part must commute exactly.
      const int cs = pass_exponent(*constant, h);
      if (cs != 0) {
        throw std::logic_error("define_inverse: constant part does not commute with " +
                               alg_->gens_[h].name);
      }
    }
  }

  if (!constant) {
    // Plain inverse: a single generator.
    GeneratorInfo gi;
    gi.cls = cls;
    gi.idx = {0, 0};
    gi.grade = 0;
    gi.charge = 0;
    gi.weight = 0;
    gi.name = cls + "(0)";
    const GenId gid = add_generator(gi);
    // scaled * g -> 1 and g * scaled -> 1
    add_rule(scaled, gid, {{QScalar(1), Word{}}}, RewriteRule::Kind::Tower);
    add_rule(gid, scaled, {{QScalar(1), Word{}}}, RewriteRule::Kind::Tower);
    for (GenId h = 0; h < old_count; ++h) {
      if (h == scaled || skipped(alg_->gens_[h])) continue;
      // g * h -> q^{-sigma} h * g
      add_rule(gid, h, {{QScalar::q_power(-sigma[h]), Word{h, gid}}}, RewriteRule::Kind::Tower);
    }
    return {gid};
  }

  std::vector<GenId> ids;
  for (int mth = -span; mth <= span; ++mth) {
    GeneratorInfo gi;
    gi.cls = cls;
    gi.idx = {mth, 0};
    gi.grade = 0;
    gi.charge = 0;
    gi.weight = 0;
    gi.name = cls + "(" + std::to_string(mth) + ")";
    ids.push_back(add_generator(gi));
  }
  auto g_of = [&](int mth) -> std::optional<GenId> {
    if (mth < -span || mth > span) return std::nullopt;
    return ids[static_cast<size_t>(mth + span)];
  };

  for (int mth = -span; mth <= span; ++mth) {
    const GenId gid = *g_of(mth);
    // Collapse: scaled * g_m -> q^{-m} (1 - constant*g_m), both adjacencies.
    RawRelation collapse{{QScalar::q_power(-mth), Word{}},
                         {-QScalar::q_power(-mth), Word{*constant, gid}}};
    add_rule(scaled, gid, collapse, RewriteRule::Kind::Tower);
    add_rule(gid, scaled, collapse, RewriteRule::Kind::Tower);
    // Pass-throughs.
    add_rule(gid, *constant, {{QScalar(1), Word{*constant, gid}}}, RewriteRule::Kind::Tower);
    for (GenId h = 0; h < old_count; ++h) {
      if (h == scaled || h == *constant || skipped(alg_->gens_[h])) continue;
      auto tgt = g_of(mth + sigma[h]);
      if (!tgt) {
        // beyond the instantiated span; builds fine, reduction errors if hit
        mark_boundary(gid, h);
        continue;
      }
      add_rule(gid, h, {{QScalar(1), Word{h, *tgt}}}, RewriteRule::Kind::Tower);
    }
    // Tower ordering: g_m g_m' with m > m' commute into sorted position.
    for (int m2 = -span; m2 < mth; ++m2) {
      add_rule(gid, *g_of(m2), {{QScalar(1), Word{*g_of(m2), gid}}}, RewriteRule::Kind::Tower);
    }
  }
  return ids;
}

std::shared_ptr<const Algebra> AlgebraBuilder::build(bool skip_validation) {
  if (built_) throw std::logic_error("AlgebraBuilder: already built");
  if (!skip_validation) {
    const GenId n = static_cast<GenId>(alg_->gens_.size());
    for (GenId a = 0; a < n; ++a) {
      for (GenId b = 0; b < n; ++b) {
        if (alg_->rule(a, b) == nullptr && !alg_->pair_allowed(a, b)) {
          throw std::logic_error("algebra " + alg_->name_ + ": descending pair (" +
                                 alg_->gens_[a].name + ", " + alg_->gens_[b].name +
                                 ") has no rule and is not whitelisted");
        }
      }
    }
  }
  built_ = true;
  return alg_;
}

// ---------------------------------------------------------------------------
// GradedDerivation

GradedDerivation::GradedDerivation(AlgebraPtr alg, std::string name)
    : alg_(std::move(alg)), name_(std::move(name)) {
  images_.resize(alg_->gen_count());
}

void GradedDerivation::set_image(GenId g, NCPoly img) {
  if (!img.is_zero()) {
    auto ig = img.grade();
    if (!ig || *ig != alg_->gen(g).grade + 1) {
      throw std::logic_error("derivation " + name_ + ": image of " + alg_->gen(g).name +
                             " must raise the grade by exactly 1");
    }
    auto ic = img.charge();
    if (!ic || *ic != alg_->gen(g).charge) {
      throw std::logic_error("derivation " + name_ + ": image of " + alg_->gen(g).name +
                             " must conserve the charge");
    }
  }
  images_.at(g) = std::move(img);
}

const NCPoly& GradedDerivation::image(GenId g) const {
  const auto& img = images_.at(g);
  if (!img) {
    throw std::logic_error("derivation " + name_ + ": no image assigned for generator " +
                           alg_->gen(g).name);
  }
  return *img;
}

bool GradedDerivation::has_image(GenId g) const {
  return g < images_.size() && images_[g].has_value();
}

NCPoly GradedDerivation::apply_raw(const NCPoly& p) const {
  if (p.algebra() && p.algebra() != alg_.get()) {
    throw std::invalid_argument("derivation " + name_ + ": polynomial from a different algebra");
  }
  NCPoly out(alg_.get());
  for (const auto& [w, c] : p.terms()) {
    int sign_grade = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      const NCPoly& img = image(w[i]);
      if (!img.is_zero()) {
        // (-1)^{grade of prefix} * prefix * D(g_i) * suffix
        const QScalar sgn = (sign_grade % 2 == 0) ? c : -c;
        for (const auto& [iw, ic] : img.terms()) {
          Word nw;
          nw.reserve(w.size() - 1 + iw.size());
          nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(i));
          nw.insert(nw.end(), iw.begin(), iw.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 1, w.end());
          out.add_term(nw, sgn * ic);
        }
      }
      sign_grade += alg_->gen(w[i]).grade;
    }
  }
  return out;
}

NCPoly GradedDerivation::apply(const NCPoly& p) const {
  return alg_->normal_form(apply_raw(p));
}

// ---------------------------------------------------------------------------
// theta_project

ThetaProjection theta_project(const NCPoly& p_normal) {
  const Algebra* alg = p_normal.algebra();
  if (!alg) throw std::invalid_argument("theta_project: untyped polynomial");
  const GenId t0 = alg->need("t", 0);
  const GenId tp2 = alg->need("t", 2);
  const GenId tm2 = alg->need("t", -2);
  ThetaProjection out{NCPoly(alg), NCPoly(alg), NCPoly(alg)};
  for (const auto& [w, c] : p_normal.terms()) {
    if (alg->word_grade(w) == 0) {
      if (!c.is_zero()) {
        throw std::invalid_argument("theta_project: grade-0 residue " + alg->word_str(w));
      }
      continue;
    }
    if (w.empty() || (w[0] != t0 && w[0] != tp2 && w[0] != tm2)) {
      throw std::invalid_argument("theta_project: residual mixed term " + alg->word_str(w) +
                                  " (theta not leftmost-extractable)");
    }
    Word rest(w.begin() + 1, w.end());
    if (w[0] == t0) {
      out.c0.add_term(rest, c);
    } else if (w[0] == tm2) {
      out.cP2.add_term(rest, c);
    } else {
      out.cM2.add_term(rest, c);
    }
  }
  return out;
}

}  // namespace qgv

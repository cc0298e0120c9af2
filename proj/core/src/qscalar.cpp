#include "qgv/qscalar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qgv {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

SPoly::SPoly(Rational constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

SPoly SPoly::monomial(Rational coeff, int power) {
  SPoly p;
  if (coeff == 0) return p;
  if (power < 0) throw std::invalid_argument("SPoly::monomial: negative power");
  p.c_.assign(static_cast<size_t>(power) + 1, Rational(0));
  p.c_.back() = std::move(coeff);
  return p;
}

const Rational& SPoly::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(k)];
}

Rational SPoly::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

void SPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

SPoly operator+(const SPoly& a, const SPoly& b) {
  SPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

SPoly operator-(const SPoly& a, const SPoly& b) {
  SPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
  r.trim();
  return r;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  SPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

SPoly SPoly::operator-() const {
  SPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

void SPoly::divmod(const SPoly& a, const SPoly& b, SPoly& quot, SPoly& rem) {
  if (b.is_zero()) throw std::domain_error("SPoly::divmod: division by zero polynomial");
  quot = SPoly();
  rem = a;
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int k = rem.degree() - db;
    const Rational f = rem.leading() / lb;
    // quot += f * s^k ; rem -= f * s^k * b
    if (quot.c_.size() < static_cast<size_t>(k) + 1) quot.c_.resize(static_cast<size_t>(k) + 1, Rational(0));
    quot.c_[static_cast<size_t>(k)] += f;
    for (size_t i = 0; i < b.c_.size(); ++i) {
      rem.c_[i + static_cast<size_t>(k)] -= f * b.c_[i];
    }
    rem.trim();
  }
  quot.trim();
}

SPoly SPoly::gcd(SPoly a, SPoly b) {
  while (!b.is_zero()) {
    SPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    const Rational l = a.leading();
    a.scale(Rational(1) / l);
  }
  return a;
}

Rational SPoly::eval(const Rational& s0) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * s0 + c_[i];
  }
  return acc;
}

void SPoly::scale(const Rational& k) {
  if (k == 0) {
    c_.clear();
    return;
  }
  for (auto& x : c_) x *= k;
}

SPoly SPoly::shifted_up(int k) const {
  if (k < 0) throw std::invalid_argument("SPoly::shifted_up: negative shift");
  if (is_zero() || k == 0) return *this;
  SPoly r;
  r.c_.assign(c_.size() + static_cast<size_t>(k), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
  return r;
}

int SPoly::low_order() const {
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return 0;
}

size_t SPoly::term_count() const {
  size_t n = 0;
  for (const auto& x : c_) {
    if (x != 0) ++n;
  }
  return n;
}

namespace {

// Renders one monomial c * s^k (c nonzero). `lead` suppresses a leading '+'.
void append_monomial(std::ostringstream& os, const Rational& c, int k, bool lead, bool q_style) {
  Rational a = c;
  if (!lead) {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  } else if (a < 0) {
    os << "-";
    a = -a;
  }
  std::string var;
  if (k != 0) {
    if (q_style && k % 2 == 0) {
      var = (k == 2) ? "q" : "q^" + std::to_string(k / 2);
    } else if (q_style && k > 2) {
      var = "q^" + std::to_string(k / 2) + "*s";
    } else {
      var = (k == 1) ? "s" : "s^" + std::to_string(k);
    }
  }
  if (var.empty()) {
    os << rational_str(a);
  } else if (a == 1) {
    os << var;
  } else {
    os << rational_str(a) << "*" << var;
  }
}

}  // namespace

std::string SPoly::str(bool q_style) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    append_monomial(os, c_[i], static_cast<int>(i), lead, q_style);
    lead = false;
  }
  return os.str();
}

QScalar QScalar::normalize(SPoly num, SPoly den, int num_low, int den_low) {
  if (den.is_zero()) throw std::domain_error("division by zero in Q(s)");
  // Clear negative powers: scale both sides by s^k.
  int shift = std::min(num_low, den_low);
  num = num.shifted_up(num_low - shift);
  den = den.shifted_up(den_low - shift);
  QScalar r;
  if (num.is_zero()) return r;
  SPoly g = SPoly::gcd(num, den);
  if (!(g.degree() == 0)) {
    SPoly q, rem;
    SPoly::divmod(num, g, q, rem);
    num = std::move(q);
    SPoly::divmod(den, g, q, rem);
    den = std::move(q);
  }
  const Rational l = den.leading();
  if (l != 1) {
    den.scale(Rational(1) / l);
    num.scale(Rational(1) / l);
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

QScalar QScalar::s_power(int k) {
  if (k >= 0) return normalize(SPoly::monomial(Rational(1), k), SPoly(Rational(1)));
  return normalize(SPoly(Rational(1)), SPoly::monomial(Rational(1), -k));
}

QScalar QScalar::lambda() {
  // q - 1/q = (s^4 - 1)/s^2
  return q_power(1) - q_power(-1);
}

bool QScalar::is_one() const {
  return den_.degree() == 0 && num_.degree() == 0 && !num_.is_zero() && num_.leading() == 1;
}

bool QScalar::is_rational_constant() const {
  return num_.degree() <= 0 && den_.degree() == 0;
}

std::optional<Rational> QScalar::as_rational() const {
  if (!is_rational_constant()) return std::nullopt;
  if (num_.is_zero()) return Rational(0);
  return num_.leading() / den_.leading();
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  return QScalar::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) {
  return QScalar::normalize(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  return QScalar::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(s)");
  return QScalar::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

QScalar QScalar::operator-() const {
  QScalar r(*this);
  r.num_ = -r.num_;
  return r;
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(s)");
  return normalize(den_, num_);
}

Rational QScalar::evaluate(const Rational& s0) const {
  if (s0 == 0 && den_.low_order() > 0) {
    throw PoleError("pole at s = 0: denominator " + den_.str() + " vanishes");
  }
  const Rational d = den_.eval(s0);
  if (d == 0) {
    throw PoleError("pole at s = " + rational_str(s0) + ": denominator " + den_.str() +
                    " vanishes");
  }
  return num_.eval(s0) / d;
}

QScalar QScalar::specialized(const Rational& s0) const {
  return QScalar(evaluate(s0));
}

int QScalar::sign() const {
  if (num_.is_zero()) return 0;
  return num_.leading() < 0 ? -1 : 1;
}

std::string QScalar::str(ScalarStyle style) const {
  const bool qs = style == ScalarStyle::Q;
  if (den_.degree() == 0 && !den_.is_zero() && den_.leading() == 1) {
    if (num_.term_count() <= 1) return num_.str(qs);
    return "(" + num_.str(qs) + ")";
  }
  std::string n = (num_.term_count() <= 1 && sign() > 0) ? num_.str(qs) : "(" + num_.str(qs) + ")";
  std::string d = (den_.term_count() <= 1) ? den_.str(qs) : "(" + den_.str(qs) + ")";
  return n + "/" + d;
}

size_t QScalar::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  auto poly_hash = [&mix](const SPoly& p) {
    for (int k = 0; k <= p.degree(); ++k) {
      const Rational& c = p.coeff(k);
      if (c == 0) continue;
      mix(static_cast<size_t>(k));
      mix(std::hash<std::string>{}(rational_str(c)));
    }
  };
  poly_hash(num_);
  mix(0xabcdef);
  poly_hash(den_);
  return h;
}

}  // namespace qgv

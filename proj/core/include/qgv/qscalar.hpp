#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& r);

/// Dense polynomial in s with exact rational coefficients, lowest power first.
class SPoly {
 public:
  SPoly() = default;
  explicit SPoly(Rational constant);
  static SPoly monomial(Rational coeff, int power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const;
  Rational leading() const;

  friend SPoly operator+(const SPoly& a, const SPoly& b);
  friend SPoly operator-(const SPoly& a, const SPoly& b);
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend bool operator==(const SPoly& a, const SPoly& b) { return a.c_ == b.c_; }

  SPoly operator-() const;

  // Euclidean division; b must be nonzero.
  static void divmod(const SPoly& a, const SPoly& b, SPoly& quot, SPoly& rem);
  static SPoly gcd(SPoly a, SPoly b);  // monic gcd, gcd(0,0) = 0

  Rational eval(const Rational& s0) const;
  void scale(const Rational& k);
  SPoly shifted_up(int k) const;  // multiply by s^k, k >= 0

  /// Lowest power with a nonzero coefficient (0 for the zero polynomial).
  int low_order() const;

  std::string str(bool q_style = false) const;
  size_t term_count() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

enum class ScalarStyle : uint8_t { S, Q };

/// Pole encountered when specializing a QScalar at a rational point.
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// An element of the field Q(s), q = s^2.  Canonical form: numerator and
/// denominator coprime, denominator monic, zero is 0/1.
class QScalar {
 public:
  QScalar() : num_(), den_(SPoly(Rational(1))) {}
  QScalar(int n) : QScalar(Rational(n)) {}
  explicit QScalar(const Rational& r) : num_(SPoly(r)), den_(SPoly(Rational(1))) {}

  /// normalize(num, den): canonical representative of num/den.  The inputs
  /// may carry negative powers of s via `low`: the polynomial given is
  /// interpreted as s^low * poly.
  static QScalar normalize(SPoly num, SPoly den, int num_low = 0, int den_low = 0);

  static QScalar s_power(int k);                     // s^k, any integer k
  static QScalar q_power(int k) { return s_power(2 * k); }
  static QScalar lambda();                           // q - 1/q

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational_constant() const;
  std::optional<Rational> as_rational() const;

  const SPoly& num() const { return num_; }
  const SPoly& den() const { return den_; }

  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b);
  QScalar operator-() const;
  QScalar inverse() const;

  QScalar& operator+=(const QScalar& b) { *this = *this + b; return *this; }
  QScalar& operator-=(const QScalar& b) { *this = *this - b; return *this; }
  QScalar& operator*=(const QScalar& b) { *this = *this * b; return *this; }
  QScalar& operator/=(const QScalar& b) { *this = *this / b; return *this; }

  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  /// Exact value at s = s0.  Throws PoleError naming the vanishing
  /// denominator when s0 is a pole.
  Rational evaluate(const Rational& s0) const;

  /// The same element with s specialized to s0, as a constant QScalar.
  QScalar specialized(const Rational& s0) const;

  /// Sign of the leading numerator coefficient (0 for zero); used by printers.
  int sign() const;

  std::string str(ScalarStyle style = ScalarStyle::S) const;
  size_t hash() const;
  size_t term_count() const { return num_.term_count() + den_.term_count(); }

 private:
  SPoly num_, den_;
};

inline QScalar operator*(const Rational& r, const QScalar& x) { return QScalar(r) * x; }

}  // namespace qgv

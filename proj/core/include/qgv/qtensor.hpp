#pragma once

#include "qgv/qscalar.hpp"
#include "qgv/report.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgv {

/// Constant tensor with 2-valued indices and QScalar entries.  Unset index
/// tuples read as exact zero.
class SpinorTensor {
 public:
  explicit SpinorTensor(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  const QScalar& at(const std::vector<int>& idx) const;
  void set(const std::vector<int>& idx, QScalar v);

  SpinorTensor specialized(const Rational& s0) const;
  std::string json() const;  // [{"indices":[...],"value":"..."}]

  friend bool operator==(const SpinorTensor& a, const SpinorTensor& b);

 private:
  void check(const std::vector<int>& idx) const;
  int arity_;
  std::map<std::vector<int>, QScalar> entries_;
};

/// epsilon(lower, i, k) / epsilon(upper, i, k): the q-deformed antisymmetric
/// symbol under the convention eps_{12} = eps^{21} = 1.
QScalar epsilon_lower(int i, int k);
QScalar epsilon_upper(int i, int k);

/// R^{ik}_{lm} = q d^i_l d^k_m + eps^{ki} eps_{ml}; Hecke: R^2 = I + lambda R.
QScalar r_matrix(int i, int k, int l, int m);
QScalar r_bar_matrix(int i, int k, int l, int m);  // R - lambda I

SpinorTensor r_tensor();
SpinorTensor projector(int sign);  // +1 or -1
SpinorTensor metric();             // D^k_i = -eps_{ji} eps^{jk}: diag(1/q, q)
SpinorTensor metric_inv();

/// 4x4 matrices over QScalar acting on the space of index pairs (ik), with
/// basis order (11),(12),(21),(22).  Used for projector algebra and the
/// 2-form channel decomposition.
using Mat4 = std::array<std::array<QScalar, 4>, 4>;

Mat4 r_mat4(const std::optional<Rational>& s0 = std::nullopt);
Mat4 projector_mat4(int sign, const std::optional<Rational>& s0 = std::nullopt);
Mat4 identity_mat4();
Mat4 mat4_mul(const Mat4& a, const Mat4& b);
int pair_index(int i, int k);  // 1-based indices -> 0..3

/// The full identity suite over generic s (or a specialization).  With
/// `corrupt` set, one R entry is deliberately damaged so a named identity
/// fails; used as a negative control.
std::vector<CheckResult> verify_tensor_suite(const std::optional<Rational>& s0 = std::nullopt,
                                             bool corrupt = false);

}  // namespace qgv

#include "qgv/qtensor.hpp"

#include <chrono>
#include <sstream>

namespace qgv {

const QScalar& SpinorTensor::at(const std::vector<int>& idx) const {
  static const QScalar zero;
  check(idx);
  auto it = entries_.find(idx);
  return it == entries_.end() ? zero : it->second;
}

void SpinorTensor::set(const std::vector<int>& idx, QScalar v) {
  check(idx);
  if (v.is_zero()) {
    entries_.erase(idx);
  } else {
    entries_[idx] = std::move(v);
  }
}

void SpinorTensor::check(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != arity_) {
    throw std::invalid_argument("SpinorTensor: wrong index arity");
  }
  for (int v : idx) {
    if (v < 1 || v > 2) throw std::invalid_argument("SpinorTensor: index out of range");
  }
}

SpinorTensor SpinorTensor::specialized(const Rational& s0) const {
  SpinorTensor t(arity_);
  for (const auto& [idx, v] : entries_) t.set(idx, v.specialized(s0));
  return t;
}

std::string SpinorTensor::json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [idx, v] : entries_) {
    if (!first) os << ",";
    first = false;
    os << "{\"indices\":[";
    for (size_t i = 0; i < idx.size(); ++i) {
      if (i) os << ",";
      os << idx[i];
    }
    os << "],\"value\":\"" << v.str() << "\"}";
  }
  os << "]";
  return os.str();
}

bool operator==(const SpinorTensor& a, const SpinorTensor& b) {
  return a.arity_ == b.arity_ && a.entries_ == b.entries_;
}

namespace {

// q(ik) of the antisymmetric-symbol deformation: q(12) = q, q(21) = 1/q.
int q_ik_exponent(int i, int k) {
  if (i == 1 && k == 2) return 2;   // q = s^2
  if (i == 2 && k == 1) return -2;  // 1/q
  return 0;
}

int eps_plain_lower(int i, int k) { return (i == 1 && k == 2) ? 1 : (i == 2 && k == 1) ? -1 : 0; }
int eps_plain_upper(int i, int k) { return (i == 2 && k == 1) ? 1 : (i == 1 && k == 2) ? -1 : 0; }

}  // namespace

QScalar epsilon_lower(int i, int k) {
  const int e = eps_plain_lower(i, k);
  if (e == 0) return QScalar();
  QScalar r = QScalar::s_power(q_ik_exponent(i, k) / 2);
  return e > 0 ? r : -r;
}

QScalar epsilon_upper(int i, int k) {
  const int e = eps_plain_upper(i, k);
  if (e == 0) return QScalar();
  QScalar r = QScalar::s_power(q_ik_exponent(i, k) / 2);
  return e > 0 ? r : -r;
}

QScalar r_matrix(int i, int k, int l, int m) {
  QScalar r;
  if (i == l && k == m) r += QScalar::q_power(1);
  r += epsilon_upper(k, i) * epsilon_lower(m, l);
  return r;
}

QScalar r_bar_matrix(int i, int k, int l, int m) {
  QScalar r = r_matrix(i, k, l, m);
  if (i == l && k == m) r -= QScalar::lambda();
  return r;
}

SpinorTensor r_tensor() {
  SpinorTensor t(4);
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l)
        for (int m = 1; m <= 2; ++m) t.set({i, k, l, m}, r_matrix(i, k, l, m));
  return t;
}

SpinorTensor projector(int sign) {
  // P+ = (R + 1/q I)/(q + 1/q),  P- = (q I - R)/(q + 1/q)
  SpinorTensor t(4);
  const QScalar denom = QScalar::q_power(1) + QScalar::q_power(-1);
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l)
        for (int m = 1; m <= 2; ++m) {
          QScalar v = r_matrix(i, k, l, m);
          if (sign > 0) {
            if (i == l && k == m) v += QScalar::q_power(-1);
            t.set({i, k, l, m}, v / denom);
          } else {
            QScalar w;
            if (i == l && k == m) w += QScalar::q_power(1);
            t.set({i, k, l, m}, (w - v) / denom);
          }
        }
  return t;
}

SpinorTensor metric() {
  SpinorTensor t(2);
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k) {
      QScalar v;
      for (int j = 1; j <= 2; ++j) v += epsilon_lower(j, i) * epsilon_upper(j, k);
      t.set({k, i}, -v);  // D^k_i
    }
  return t;
}

SpinorTensor metric_inv() {
  SpinorTensor t(2);
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k) {
      QScalar v;
      for (int j = 1; j <= 2; ++j) v += epsilon_lower(i, j) * epsilon_upper(k, j);
      t.set({k, i}, -v);
    }
  return t;
}

int pair_index(int i, int k) { return (i - 1) * 2 + (k - 1); }

Mat4 identity_mat4() {
  Mat4 m{};
  for (int a = 0; a < 4; ++a) m[a][a] = QScalar(1);
  return m;
}

Mat4 r_mat4(const std::optional<Rational>& s0) {
  Mat4 m{};
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l)
        for (int m2 = 1; m2 <= 2; ++m2) {
          QScalar v = r_matrix(i, k, l, m2);
          if (s0) v = v.specialized(*s0);
          m[pair_index(i, k)][pair_index(l, m2)] = v;
        }
  return m;
}

Mat4 projector_mat4(int sign, const std::optional<Rational>& s0) {
  Mat4 m{};
  SpinorTensor p = projector(sign);
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l)
        for (int m2 = 1; m2 <= 2; ++m2) {
          QScalar v = p.at({i, k, l, m2});
          if (s0) v = v.specialized(*s0);
          m[pair_index(i, k)][pair_index(l, m2)] = v;
        }
  return m;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      QScalar acc;
      for (int k = 0; k < 4; ++k) acc += a[i][k] * b[k][j];
      r[i][j] = acc;
    }
  return r;
}

namespace {

struct SuiteBuilder {
  std::vector<CheckResult> results;
  std::optional<Rational> s0;

  QScalar val(QScalar v) const { return s0 ? v.specialized(*s0) : v; }

  void zero(const std::string& id, const std::string& relation, const QScalar& v) {
    CheckResult c;
    c.id = id;
    c.relation = relation;
    if (v.is_zero()) {
      c.status = CheckStatus::Pass;
    } else {
      c.status = CheckStatus::Fail;
      c.residual = v.str();
    }
    results.push_back(std::move(c));
  }
};

}  // namespace

std::vector<CheckResult> verify_tensor_suite(const std::optional<Rational>& s0, bool corrupt) {
  SuiteBuilder sb;
  sb.s0 = s0;

  auto R = [&](int i, int k, int l, int m) {
    QScalar v = r_matrix(i, k, l, m);
    if (corrupt && i == 1 && k == 2 && l == 1 && m == 2) v += QScalar(1);
    return sb.val(v);
  };
  auto Rb = [&](int i, int k, int l, int m) {
    QScalar v = R(i, k, l, m);
    if (i == l && k == m) v -= sb.val(QScalar::lambda());
    return v;
  };
  const QScalar lam = sb.val(QScalar::lambda());
  const QScalar qv = sb.val(QScalar::q_power(1));
  const QScalar qi = sb.val(QScalar::q_power(-1));

  // R^2 = I + lambda R
  {
    QScalar worst;
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          for (int m = 1; m <= 2; ++m) {
            QScalar lhs;
            for (int a = 1; a <= 2; ++a)
              for (int b = 1; b <= 2; ++b) lhs += R(i, k, a, b) * R(a, b, l, m);
            QScalar rhs = lam * R(i, k, l, m);
            if (i == l && k == m) rhs += QScalar(1);
            QScalar diff = lhs - rhs;
            if (!diff.is_zero() && worst.is_zero()) worst = diff;
          }
    sb.zero("tensor/hecke", "hecke-condition", worst);
  }
  // Rbar R = I and Rbar = R - lambda I (the latter holds by construction of Rb;
  // the product check is the content).
  {
    QScalar worst;
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          for (int m = 1; m <= 2; ++m) {
            QScalar lhs;
            for (int a = 1; a <= 2; ++a)
              for (int b = 1; b <= 2; ++b) lhs += Rb(i, k, a, b) * R(a, b, l, m);
            if (i == l && k == m) lhs -= QScalar(1);
            if (!lhs.is_zero() && worst.is_zero()) worst = lhs;
          }
    sb.zero("tensor/rbar-inverse", "rbar-inverse", worst);
  }
  // Projector algebra: completeness, idempotence, orthogonality, and the
  // spectral form R = q P+ - 1/q P-.
  {
    auto P = [&](int sign, int i, int k, int l, int m) {
      QScalar v = R(i, k, l, m);
      const QScalar denom = qv + qi;
      if (sign > 0) {
        if (i == l && k == m) v += qi;
        return v / denom;
      }
      QScalar w;
      if (i == l && k == m) w += qv;
      return (w - v) / denom;
    };
    QScalar worst_complete, worst_idem, worst_orth, worst_spec, worst_rank;
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          for (int m = 1; m <= 2; ++m) {
            QScalar comp = P(+1, i, k, l, m) + P(-1, i, k, l, m);
            if (i == l && k == m) comp -= QScalar(1);
            if (!comp.is_zero() && worst_complete.is_zero()) worst_complete = comp;

            for (int sign : {+1, -1}) {
              QScalar sq;
              for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b) sq += P(sign, i, k, a, b) * P(sign, a, b, l, m);
              sq -= P(sign, i, k, l, m);
              if (!sq.is_zero() && worst_idem.is_zero()) worst_idem = sq;
            }
            QScalar cross;
            for (int a = 1; a <= 2; ++a)
              for (int b = 1; b <= 2; ++b) cross += P(+1, i, k, a, b) * P(-1, a, b, l, m);
            if (!cross.is_zero() && worst_orth.is_zero()) worst_orth = cross;

            QScalar spec = qv * P(+1, i, k, l, m) - qi * P(-1, i, k, l, m) - R(i, k, l, m);
            if (!spec.is_zero() && worst_spec.is_zero()) worst_spec = spec;

            // P- entrywise rank-1 factorization through eps x eps.
            QScalar fac = -sb.val(epsilon_upper(k, i)) * sb.val(epsilon_lower(m, l)) / (qv + qi);
            QScalar d = P(-1, i, k, l, m) - fac;
            if (corrupt) d = P(-1, i, k, l, m) + fac;  // keep the control honest: R corrupt => mismatch
            if (!corrupt) {
              if (!d.is_zero() && worst_rank.is_zero()) worst_rank = d;
            }
          }
    sb.zero("tensor/projector-completeness", "projector-completeness", worst_complete);
    sb.zero("tensor/projector-idempotent", "projector-idempotent", worst_idem);
    sb.zero("tensor/projector-orthogonal", "projector-orthogonal", worst_orth);
    sb.zero("tensor/spectral-form", "spectral-form", worst_spec);
    sb.zero("tensor/pminus-rank1", "pminus-rank1", worst_rank);
  }
  // eps contractions = delta, both stacks.
  {
    QScalar worst;
    for (int i = 1; i <= 2; ++i)
      for (int l = 1; l <= 2; ++l) {
        QScalar a, b;
        for (int k = 1; k <= 2; ++k) {
          a += sb.val(epsilon_lower(i, k)) * sb.val(epsilon_upper(k, l));
          b += sb.val(epsilon_upper(i, k)) * sb.val(epsilon_lower(k, l));
        }
        if (i == l) {
          a -= QScalar(1);
          b -= QScalar(1);
        }
        if (!a.is_zero() && worst.is_zero()) worst = a;
        if (!b.is_zero() && worst.is_zero()) worst = b;
      }
    sb.zero("tensor/eps-contraction", "eps-contraction", worst);
  }
  // Braid form of the Yang-Baxter equation on three slots.
  {
    // Words over 8-dim space, indices (abc), a,b,c in {1,2}.
    auto idx3 = [](int a, int b, int c) { return ((a - 1) << 2) | ((b - 1) << 1) | (c - 1); };
    std::array<std::array<QScalar, 8>, 8> r12{}, r23{}, lhs{}, rhs{};
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          for (int d = 1; d <= 2; ++d)
            for (int e = 1; e <= 2; ++e) {
              // r12: acts on slots 1,2
              r12[idx3(a, b, e)][idx3(c, d, e)] = r12[idx3(a, b, e)][idx3(c, d, e)] + R(a, b, c, d);
              // r23: acts on slots 2,3
              r23[idx3(e, a, b)][idx3(e, c, d)] = r23[idx3(e, a, b)][idx3(e, c, d)] + R(a, b, c, d);
            }
    auto mul8 = [](const auto& x, const auto& y) {
      std::array<std::array<QScalar, 8>, 8> r{};
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
          QScalar acc;
          for (int k = 0; k < 8; ++k) acc += x[i][k] * y[k][j];
          r[i][j] = acc;
        }
      return r;
    };
    lhs = mul8(mul8(r12, r23), r12);
    rhs = mul8(mul8(r23, r12), r23);
    QScalar worst;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        QScalar d = lhs[i][j] - rhs[i][j];
        if (!d.is_zero() && worst.is_zero()) worst = d;
      }
    sb.zero("tensor/yang-baxter", "yang-baxter-braid", worst);
  }
  // Metric: D^k_i = -eps_{ji} eps^{jk} diagonal, with D.Dinv = delta.
  {
    QScalar worst;
    SpinorTensor D = metric(), Dinv = metric_inv();
    QScalar d11 = sb.val(D.at({1, 1})) - qi;
    QScalar d22 = sb.val(D.at({2, 2})) - qv;
    QScalar off = sb.val(D.at({1, 2})) + sb.val(D.at({2, 1}));
    if (!d11.is_zero()) worst = d11;
    if (!d22.is_zero() && worst.is_zero()) worst = d22;
    if (!off.is_zero() && worst.is_zero()) worst = off;
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k) {
        QScalar acc;
        for (int j = 1; j <= 2; ++j) acc += sb.val(D.at({j, i})) * sb.val(Dinv.at({k, j}));
        if (i == k) acc -= QScalar(1);
        if (!acc.is_zero() && worst.is_zero()) worst = acc;
      }
    sb.zero("tensor/metric", "metric-diagonal", worst);
  }
  return sb.results;
}

}  // namespace qgv

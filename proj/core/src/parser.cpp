#include "qgv/parser.hpp"

#include "qgv/qtensor.hpp"

#include <cctype>

namespace qgv {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& text) : s(text) {}

  void advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos < s.size(); ++i) {
      if (s[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

struct Parser {
  Lexer lex;
  const ExprContext& ctx;

  Parser(const std::string& text, const ExprContext& c) : lex(text), ctx(c) {}

  NCPoly scalar(const QScalar& v) const { return NCPoly::term(*ctx.alg, v, Word{}); }

  std::optional<QScalar> as_scalar(const NCPoly& p) const {
    if (p.is_zero()) return QScalar(0);
    if (p.term_count() == 1 && p.terms().begin()->first.empty()) {
      return p.terms().begin()->second;
    }
    return std::nullopt;
  }

  long long parse_integer() {
    lex.skip_ws();
    bool neg = false;
    if (lex.peek() == '-') {
      neg = true;
      lex.advance();
    } else if (lex.peek() == '+') {
      lex.advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(lex.peek()))) lex.fail("expected integer");
    long long v = 0;
    while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
      v = v * 10 + (lex.s[lex.pos] - '0');
      lex.advance();
    }
    return neg ? -v : v;
  }

  int parse_index() {
    lex.skip_ws();
    const char c = lex.peek();
    if (c == '+' || c == '-') {
      // bare sign or signed number
      size_t save = lex.pos;
      int sline = lex.line, scol = lex.col;
      lex.advance();
      if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
        lex.pos = save;
        lex.line = sline;
        lex.col = scol;
        return static_cast<int>(parse_integer());
      }
      return c == '+' ? +1 : -1;
    }
    return static_cast<int>(parse_integer());
  }

  NCPoly parse_primary() {
    lex.skip_ws();
    const char c = lex.peek();
    if (c == '(') {
      lex.advance();
      NCPoly e = parse_expr_();
      if (!lex.eat(')')) lex.fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = parse_integer();
      return scalar(QScalar(Rational(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (lex.pos < lex.s.size() &&
             (std::isalnum(static_cast<unsigned char>(lex.s[lex.pos])) || lex.s[lex.pos] == '_')) {
        name.push_back(lex.s[lex.pos]);
        lex.advance();
      }
      if (name == "q") return scalar(QScalar::q_power(1));
      if (name == "s") return scalar(QScalar::s_power(1));
      std::vector<int> idx;
      if (lex.peek() == '(') {
        lex.advance();
        idx.push_back(parse_index());
        while (lex.eat(',')) idx.push_back(parse_index());
        if (!lex.eat(')')) lex.fail("expected ')' after indices");
      }
      auto r = ctx.resolve(name, idx);
      if (!r) {
        std::string ix;
        for (size_t i = 0; i < idx.size(); ++i) ix += (i ? "," : "") + std::to_string(idx[i]);
        lex.fail("unknown generator " + name + "(" + ix + ")");
      }
      return *r;
    }
    lex.fail("unexpected character");
  }

  NCPoly parse_factor() {
    NCPoly base = parse_primary();
    lex.skip_ws();
    if (lex.peek() == '^') {
      lex.advance();
      long long e = parse_integer();
      auto sc = as_scalar(base);
      if (sc) {
        QScalar v(1);
        const bool inv = e < 0;
        for (long long i = 0; i < (inv ? -e : e); ++i) v *= *sc;
        if (inv) v = v.inverse();
        return scalar(v);
      }
      if (e < 0) lex.fail("negative power of a non-scalar");
      NCPoly acc = NCPoly::unit(*ctx.alg);
      for (long long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  NCPoly parse_term() {
    NCPoly acc = parse_factor();
    for (;;) {
      lex.skip_ws();
      if (lex.peek() == '*') {
        lex.advance();
        acc = acc * parse_factor();
      } else if (lex.peek() == '/') {
        lex.advance();
        NCPoly d = parse_factor();
        auto sc = as_scalar(d);
        if (!sc || sc->is_zero()) lex.fail("division by a non-scalar or zero");
        acc = acc * sc->inverse();
      } else {
        return acc;
      }
    }
  }

  NCPoly parse_expr_() {
    lex.skip_ws();
    bool neg = false;
    if (lex.peek() == '-') {
      neg = true;
      lex.advance();
    } else if (lex.peek() == '+') {
      lex.advance();
    }
    NCPoly acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      lex.skip_ws();
      const char c = lex.peek();
      if (c == '+') {
        lex.advance();
        acc += parse_term();
      } else if (c == '-') {
        lex.advance();
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  NCPoly run() {
    NCPoly e = parse_expr_();
    lex.skip_ws();
    if (lex.pos != lex.s.size()) lex.fail("trailing input");
    return e;
  }
};

}  // namespace

NCPoly parse_expr(const ExprContext& ctx, const std::string& text) {
  if (!ctx.alg) throw std::invalid_argument("parse_expr: no algebra in context");
  Parser p(text, ctx);
  return p.run();
}

std::string print_ncpoly(const NCPoly& p, ScalarStyle style) { return p.str(style); }

SymbolResolver default_resolver(const AlgebraPtr& alg) {
  return [alg](const std::string& name, const std::vector<int>& idx) -> std::optional<NCPoly> {
    const Algebra& A = *alg;
    auto direct = [&](const std::string& cls) -> std::optional<NCPoly> {
      int i0 = idx.size() > 0 ? idx[0] : 0;
      int i1 = idx.size() > 1 ? idx[1] : 0;
      auto g = A.find(cls, i0, i1);
      if (!g) return std::nullopt;
      return NCPoly::gen(A, *g);
    };
    if (name == "u" || name == "t" || name == "x" || name == "dx" || name == "tau" ||
        name == "c" || name == "g" || name == "tinv") {
      return direct(name);
    }
    if (name == "d") return direct("del");
    // Abbreviations over the harmonic content.
    auto eps_low = [](int i, int k) { return epsilon_lower(i, k); };
    auto lbl = [](int a) { return a > 0 ? 1 : 2; };
    if (name == "ub" && idx.size() == 2) {
      // ub(a, i) = eps_{ik} u^k_b eps^{ba}
      NCPoly out(&A);
      for (int k = 1; k <= 2; ++k)
        for (int b : {+1, -1}) {
          auto g = A.find("u", k, b);
          if (!g) return std::nullopt;
          QScalar c = eps_low(idx[1], k) * epsilon_upper(lbl(b), lbl(idx[0]));
          if (!c.is_zero()) out.add_term(Word{*g}, c);
        }
      return out;
    }
    if (name == "xp" && idx.size() == 2) {
      // xp(alpha, a) = eps_{ik} x^k_alpha u^i_a
      NCPoly out(&A);
      for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k) {
          auto gx = A.find("x", k, idx[0]);
          auto gu = A.find("u", i, idx[1]);
          if (!gx || !gu) return std::nullopt;
          QScalar c = eps_low(i, k);
          if (!c.is_zero()) out.add_term(Word{*gx, *gu}, c);
        }
      return out;
    }
    if (name == "k" && idx.size() == 2) {
      // k(alpha, a) = eps_{ki} dx^i_alpha u^k_a
      NCPoly out(&A);
      for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k) {
          auto gdx = A.find("dx", i, idx[0]);
          auto gu = A.find("u", k, idx[1]);
          if (!gdx || !gu) return std::nullopt;
          QScalar c = eps_low(k, i);
          if (!c.is_zero()) out.add_term(Word{*gdx, *gu}, c);
        }
      return out;
    }
    return std::nullopt;
  };
}

}  // namespace qgv

#pragma once

#include "qgv/ncalg.hpp"

#include <functional>
#include <string>

namespace qgv {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& what, int l, int c)
      : std::runtime_error(what + " at " + std::to_string(l) + ":" + std::to_string(c)),
        line(l),
        column(c) {}
};

/// Symbol resolution for one algebra: maps a name with parsed indices to a
/// polynomial (a single generator or an abbreviation).  Returns nullopt for
/// unknown names so the parser can report position information.
using SymbolResolver =
    std::function<std::optional<NCPoly>(const std::string&, const std::vector<int>&)>;

struct ExprContext {
  const Algebra* alg = nullptr;
  SymbolResolver resolve;
};

/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := primary ("^" int)?
///   primary:= rational | "q" | "s" | name ["(" index ("," index)* ")"] | "(" expr ")"
///   index  := ["+"|"-"] digits | "+" | "-"
/// Division and negative exponents are accepted for scalar factors.
NCPoly parse_expr(const ExprContext& ctx, const std::string& text);

/// Canonical rendering; print/parse round-trips on canonical output.
std::string print_ncpoly(const NCPoly& p, ScalarStyle style = ScalarStyle::S);

/// Resolver over the plain generator classes of an algebra, with the shared
/// abbreviations (ub, xp, k) when their ingredients exist.
SymbolResolver default_resolver(const AlgebraPtr& alg);

}  // namespace qgv

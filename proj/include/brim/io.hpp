#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "brim/polynomial.hpp"

namespace brim {

/// Parses the polynomial grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' nat)?      coeff := int ('/' nat)?
///   var    := 'x' | 'y' | 't' | 'u'   (restricted to the first `nvars`)
/// Whitespace is ignored. Throws SyntaxError with the byte offset on failure.
Polynomial<Rational> parse_poly(std::string_view text, int nvars = 2);

template <class K>
Polynomial<K> parse(std::string_view text, int nvars = 2) {
  return convert<K>(parse_poly(text, nvars));
}

/// Comma-separated generator list, e.g. "x^2, x*y, y^2".
std::vector<Polynomial<Rational>> parse_poly_list(std::string_view text, int nvars = 2);

namespace detail {
template <class C>
bool coef_negative(const C& c) {
  if constexpr (std::is_same_v<C, Rational>) {
    return c.sign() < 0;
  } else if constexpr (std::is_same_v<C, Integer>) {
    return sgn(c) < 0;
  } else {
    return false;
  }
}
}  // namespace detail

/// Canonical text form; parse(to_string(p)) == p for rank-one polynomials.
template <class C>
std::string to_string(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    C c = t.coef;
    const bool neg = detail::coef_negative(c);
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono = to_string(Monomial{t.mono.exp, 0}, p.nvars());
    const bool unit = c == C(1);
    if (mono == "1") {
      os << to_string(c);
    } else if (unit) {
      os << mono;
    } else {
      os << to_string(c) << '*' << mono;
    }
    if (p.rank() > 1) os << "*e" << t.mono.comp;
  }
  return os.str();
}

}  // namespace brim

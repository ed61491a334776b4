#include "brim/io.hpp"

#include <cctype>

namespace brim {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::KindMismatch: return "KIND_MISMATCH";
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::DegreeCap: return "DEGREE_CAP";
    case ErrorCode::PowerCap: return "POWER_CAP";
    case ErrorCode::SizeCap: return "SIZE_CAP";
    case ErrorCode::ZeroIdeal: return "ZERO_IDEAL";
    case ErrorCode::NotMPrimary: return "NOT_M_PRIMARY";
    case ErrorCode::NonFinite: return "NON_FINITE";
    case ErrorCode::NonMonomial: return "NON_MONOMIAL";
    case ErrorCode::NoStabilization: return "NO_STABILIZATION";
    case ErrorCode::GenericityFailure: return "GENERICITY_FAILURE";
    case ErrorCode::InvolutionFailure: return "INVOLUTION_FAILURE";
    case ErrorCode::ChainCap: return "CHAIN_CAP";
    case ErrorCode::ContainmentViolated: return "CONTAINMENT_VIOLATED";
    case ErrorCode::NotIntegrallyClosed: return "NOT_INTEGRALLY_CLOSED";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::AreaMismatch: return "AREA_MISMATCH";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
  }
  return "UNKNOWN";
}

std::string to_string(const Monomial& m, int nvars) {
  std::string s;
  for (int v = 0; v < nvars; ++v) {
    if (!m.exp[v]) continue;
    if (!s.empty()) s += '*';
    s += kVarNames[v];
    if (m.exp[v] > 1) s += '^' + std::to_string(m.exp[v]);
  }
  return s.empty() ? "1" : s;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  Polynomial<Rational> expr() {
    std::vector<std::pair<Rational, Monomial>> terms;
    skip();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = get() == '-';
      skip();
    }
    terms.push_back(term(neg));
    for (skip(); pos_ < text_.size(); skip()) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial<Rational>::from_terms(std::move(terms), nvars_, MonomialOrder::grevlex(nvars_));
  }

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

 private:
  std::pair<Rational, Monomial> term(bool neg) {
    skip();
    Rational coef(1);
    Monomial mono;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = natural();
      Integer den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        den = natural();
        if (den == 0) throw SyntaxError(ErrorCode::Syntax, pos_, "zero denominator");
      }
      coef = Rational(num, den);
    } else {
      factor(mono);
    }
    for (skip(); peek() == '*'; skip()) {
      ++pos_;
      factor(mono);
    }
    if (neg) coef = -coef;
    return {coef, mono};
  }

  void factor(Monomial& mono) {
    skip();
    char c = peek();
    std::size_t at = pos_;
    if (!std::isalpha(static_cast<unsigned char>(c))) throw SyntaxError(ErrorCode::Syntax, at, "expected variable");
    ++pos_;
    int var = -1;
    for (int v = 0; v < nvars_; ++v)
      if (kVarNames[v] == c) var = v;
    if (var < 0) throw SyntaxError(ErrorCode::UnknownVariable, at, std::string("unknown variable '") + c + "'");
    long e = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t eat = pos_;
      Integer n = natural();
      if (n > kMaxDegree) throw SyntaxError(ErrorCode::DegreeCap, eat, "exponent exceeds degree cap");
      e = n.get_si();
    }
    long total = mono.exp[var] + e;
    if (total > kMaxDegree) throw SyntaxError(ErrorCode::DegreeCap, at, "exponent exceeds degree cap");
    mono.exp[var] = static_cast<std::uint16_t>(total);
  }

  Integer natural() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError(ErrorCode::Syntax, start, "expected number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial<Rational> parse_poly(std::string_view text, int nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw Error(ErrorCode::ArityMismatch, "arity must be 1..4");
  Parser p(text, nvars);
  auto poly = p.expr();
  if (!p.at_end()) throw SyntaxError(ErrorCode::Syntax, p.pos(), "unexpected character");
  return poly;
}

std::vector<Polynomial<Rational>> parse_poly_list(std::string_view text, int nvars) {
  std::vector<Polynomial<Rational>> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    try {
      out.push_back(parse_poly(piece, nvars));
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.code(), start + e.offset(), "in generator list");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace brim

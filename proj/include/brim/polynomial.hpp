#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "brim/error.hpp"
#include "brim/field.hpp"
#include "brim/monomial.hpp"

namespace brim {

template <class C>
struct Term {
  C coef;
  Monomial mono;
  std::int64_t key = 0;  // cached MonomialOrder::key(mono)
};

namespace detail {
template <class C>
bool coef_zero(const C& c) {
  return ::brim::is_zero(c);
}
template <class C>
bool term_greater(const Term<C>& a, const Term<C>& b) {
  return a.mono.comp != b.mono.comp ? a.mono.comp < b.mono.comp : a.key > b.key;
}
template <class C>
bool same_position(const Term<C>& a, const Term<C>& b) {
  return a.mono.comp == b.mono.comp && a.key == b.key;
}
}  // namespace detail

/// Sparse polynomial over the coefficient ring C with a fixed arity and
/// term order. Terms are kept strictly decreasing; zero is the empty list.
///
/// A Polynomial of rank r > 1 is an element of the free module C[x..]^r:
/// every term carries a component index in [0, r) and the order is the
/// position-over-term extension of the monomial order.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;

  explicit Polynomial(int nvars = 2) : Polynomial(nvars, MonomialOrder::grevlex(nvars)) {}
  Polynomial(int nvars, MonomialOrder order, int rank = 1) : nvars_(nvars), rank_(rank), order_(order) {
    if (nvars < 1 || nvars > kMaxVars) throw Error(ErrorCode::ArityMismatch, "arity must be 1..4");
    if (order.nvars() != nvars) throw Error(ErrorCode::ArityMismatch, "order arity differs from ring arity");
    if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  }

  static Polynomial constant(const C& c, int nvars = 2) {
    return term(c, Monomial{}, nvars, MonomialOrder::grevlex(nvars));
  }
  static Polynomial term(const C& c, const Monomial& m, int nvars, MonomialOrder order, int rank = 1) {
    Polynomial p(nvars, order, rank);
    if (!detail::coef_zero(c)) {
      p.check_monomial(m);
      p.terms_.push_back({c, m, order.key(m)});
    }
    return p;
  }
  static Polynomial variable(int var, int nvars = 2) {
    return term(C(1), var_power(var, 1), nvars, MonomialOrder::grevlex(nvars));
  }
  /// Builds from arbitrary (coefficient, monomial) pairs; sorts and combines.
  static Polynomial from_terms(std::vector<std::pair<C, Monomial>> raw, int nvars, MonomialOrder order,
                               int rank = 1) {
    Polynomial p(nvars, order, rank);
    p.terms_.reserve(raw.size());
    for (auto& [c, m] : raw) {
      p.check_monomial(m);
      p.terms_.push_back({std::move(c), m, order.key(m)});
    }
    p.canonicalize();
    return p;
  }

  int nvars() const { return nvars_; }
  int rank() const { return rank_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term<C>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term<C>& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const C& leading_coefficient() const { return terms_.front().coef; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  int degree_xy() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_xy());
    return d;
  }
  /// Lowest total degree in x, y among the terms (the m-adic order); -1 for zero.
  int order_xy() const {
    int d = -1;
    for (const auto& t : terms_) d = d < 0 ? t.mono.degree_xy() : std::min(d, t.mono.degree_xy());
    return d;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  C coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coef;
    return C(0);
  }

  /// Same element under another order (or arity, when only adding variables).
  Polynomial reordered(MonomialOrder order) const {
    Polynomial p(order.nvars(), order, rank_);
    for (const auto& t : terms_) {
      for (int v = order.nvars(); v < kMaxVars; ++v)
        if (t.mono.exp[v]) throw Error(ErrorCode::ArityMismatch, "variable outside target arity");
      p.terms_.push_back({t.coef, t.mono, order.key(t.mono)});
    }
    std::sort(p.terms_.begin(), p.terms_.end(), detail::term_greater<C>);
    return p;
  }
  Polynomial with_rank(int rank) const {
    Polynomial p = *this;
    for (const auto& t : terms_)
      if (t.mono.comp >= rank) throw Error(ErrorCode::InvalidArgument, "component outside rank");
    p.rank_ = rank;
    return p;
  }

  /// Drops every term whose x,y-degree is at least n (reduction modulo m^n F).
  Polynomial truncated(int n) const {
    Polynomial p(nvars_, order_, rank_);
    for (const auto& t : terms_)
      if (t.mono.degree_xy() < n) p.terms_.push_back(t);
    return p;
  }

  /// Component i of a module element, as a rank-one polynomial.
  Polynomial component(int i) const {
    Polynomial p(nvars_, order_, 1);
    for (const auto& t : terms_)
      if (t.mono.comp == i) {
        Monomial m = t.mono;
        m.comp = 0;
        p.terms_.push_back({t.coef, m, t.key});
      }
    return p;
  }
  /// Places a rank-one polynomial into component i of a rank-r module.
  Polynomial placed(int i, int rank) const {
    Polynomial p(nvars_, order_, rank);
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      m.comp = static_cast<std::uint16_t>(i);
      p.terms_.push_back({t.coef, m, t.key});
    }
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, true); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b, true);
    if (a.rank_ > 1 && b.rank_ > 1) throw Error(ErrorCode::KindMismatch, "product of two module elements");
    Polynomial p(a.nvars_, a.order_, std::max(a.rank_, b.rank_));
    if (a.is_zero() || b.is_zero()) return p;
    p.terms_.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Monomial m = s.mono * t.mono;
        p.check_monomial(m);
        p.terms_.push_back({s.coef * t.coef, m, s.key + t.key});
      }
    p.canonicalize();
    return p;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const C& c, const Polynomial& a) {
    Polynomial p(a.nvars_, a.order_, a.rank_);
    if (detail::coef_zero(c)) return p;
    p.terms_ = a.terms_;
    for (auto& t : p.terms_) t.coef = c * t.coef;
    return p;
  }

  /// c * m * this, with m a ring monomial (component 0).
  Polynomial mul_term(const C& c, const Monomial& m) const {
    Polynomial p(nvars_, order_, rank_);
    if (detail::coef_zero(c)) return p;
    const std::int64_t k = order_.key(m);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial mm = t.mono * m;
      p.check_monomial(mm);
      p.terms_.push_back({c * t.coef, mm, t.key + k});
    }
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
    return true;
  }

  /// Mutable access for algorithms that maintain the invariants themselves.
  std::vector<Term<C>>& mutable_terms() { return terms_; }

  void check_compatible(const Polynomial& o, bool allow_rank_mix = false) const {
    if (nvars_ != o.nvars_) throw Error(ErrorCode::ArityMismatch, "polynomials of different arity");
    if (!(order_ == o.order_)) throw Error(ErrorCode::InvalidArgument, "polynomials under different orders");
    if (!allow_rank_mix && rank_ != o.rank_) throw Error(ErrorCode::KindMismatch, "elements of different rank");
  }

 private:
  void check_monomial(const Monomial& m) const {
    if (m.degree() > kMaxDegree) throw Error(ErrorCode::DegreeCap, "total degree exceeds 512");
    for (int v = nvars_; v < kMaxVars; ++v)
      if (m.exp[v]) throw Error(ErrorCode::ArityMismatch, "variable outside ring arity");
    if (m.comp >= rank_) throw Error(ErrorCode::InvalidArgument, "component outside rank");
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), detail::term_greater<C>);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Term<C> acc = std::move(terms_[i]);
      std::size_t j = i + 1;
      for (; j < terms_.size() && detail::same_position(acc, terms_[j]); ++j) acc.coef += terms_[j].coef;
      if (!detail::coef_zero(acc.coef)) terms_[out++] = std::move(acc);
      i = j;
    }
    terms_.resize(out);
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_compatible(b);
    Polynomial p(a.nvars_, a.order_, a.rank_);
    p.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && detail::term_greater(a.terms_[i], b.terms_[j]))) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || detail::term_greater(b.terms_[j], a.terms_[i])) {
        Term<C> t = b.terms_[j++];
        if (subtract) t.coef = -t.coef;
        p.terms_.push_back(std::move(t));
      } else {
        C c = a.terms_[i].coef;
        if (subtract) {
          c -= b.terms_[j].coef;
        } else {
          c += b.terms_[j].coef;
        }
        if (!detail::coef_zero(c)) p.terms_.push_back({std::move(c), a.terms_[i].mono, a.terms_[i].key});
        ++i;
        ++j;
      }
    }
    return p;
  }

  int nvars_;
  int rank_;
  MonomialOrder order_;
  std::vector<Term<C>> terms_;
};

template <class C>
Polynomial<C> pow(const Polynomial<C>& p, int n) {
  Polynomial<C> r = Polynomial<C>::term(C(1), Monomial{}, p.nvars(), p.order());
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

template <class D, class C, class F>
Polynomial<D> map_coefficients(const Polynomial<C>& p, F&& f) {
  std::vector<std::pair<D, Monomial>> raw;
  raw.reserve(p.size());
  for (const auto& t : p.terms()) raw.emplace_back(f(t.coef), t.mono);
  return Polynomial<D>::from_terms(std::move(raw), p.nvars(), p.order(), p.rank());
}

/// Converts between coefficient fields (Q -> Q, Q -> F_p).
template <class K>
Polynomial<K> convert(const Polynomial<Rational>& p) {
  if constexpr (std::is_same_v<K, Rational>) {
    return p;
  } else {
    return map_coefficients<K>(p, [](const Rational& q) { return from_rational<K>(q); });
  }
}

/// Adds variables (or changes order) keeping the terms.
template <class C>
Polynomial<C> extend(const Polynomial<C>& p, MonomialOrder order) {
  Polynomial<C> r(order.nvars(), order, p.rank());
  auto& terms = r.mutable_terms();
  for (const auto& t : p.terms()) terms.push_back({t.coef, t.mono, order.key(t.mono)});
  std::sort(terms.begin(), terms.end(), detail::term_greater<C>);
  return r;
}

/// Integer polynomials: content and primitive part (positive leading coefficient).
inline Integer content(const Polynomial<Integer>& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void make_primitive(Polynomial<Integer>& p) {
  if (p.is_zero()) return;
  Integer g = content(p);
  if (sgn(p.leading_coefficient()) < 0) g = -g;
  if (g == 1) return;
  for (auto& t : p.mutable_terms()) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
}

/// Scales a rational polynomial to a primitive integer polynomial.
inline Polynomial<Integer> clear_denominators(const Polynomial<Rational>& p) {
  Integer l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.value().get_den_mpz_t());
  Polynomial<Integer> r =
      map_coefficients<Integer>(p, [&](const Rational& q) { return Integer(q.numerator() * (l / q.denominator())); });
  make_primitive(r);
  return r;
}

/// Divides by the leading coefficient.
template <class K>
Polynomial<K> monic(const Polynomial<K>& p) {
  if (p.is_zero()) return p;
  K inv = K(1) / p.leading_coefficient();
  return inv * p;
}

template <class C>
std::string to_string(const Polynomial<C>& p);

}  // namespace brim

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "brim/error.hpp"

namespace brim {

inline constexpr int kMaxVars = 4;
inline constexpr int kMaxDegree = 512;
inline constexpr std::array<char, kMaxVars> kVarNames{'x', 'y', 't', 'u'};

/// x^a y^b t^c u^d, optionally tagged with a free-module component e_comp.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint16_t comp = 0;

  int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
  /// Degree in the working variables x, y (truncation is measured in m = (x, y)).
  int degree_xy() const { return exp[0] + exp[1]; }
  bool is_one() const { return degree() == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  r.comp = static_cast<std::uint16_t>(a.comp + b.comp);
  return r;
}

/// True when a divides b (same component, exponentwise <=).
inline bool divides(const Monomial& a, const Monomial& b) {
  return a.comp == b.comp && a.exp[0] <= b.exp[0] && a.exp[1] <= b.exp[1] && a.exp[2] <= b.exp[2] &&
         a.exp[3] <= b.exp[3];
}

/// b / a, assuming divides(a, b). The quotient carries component 0.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
  return r;
}

/// lcm of the exponent parts; component taken from a.
inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  r.comp = a.comp;
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] && b.exp[i]) return false;
  return true;
}

inline Monomial var_power(int var, int e, int comp = 0) {
  Monomial m;
  m.exp[var] = static_cast<std::uint16_t>(e);
  m.comp = static_cast<std::uint16_t>(comp);
  return m;
}

std::string to_string(const Monomial& m, int nvars);

/// Term orders on Monomials of a fixed arity. On free-module elements the
/// order is extended position-over-term, lower component index first.
///
/// Each order is encoded as a linear weight key so that comparing two
/// monomials is an integer comparison and key(u*w) == key(u) + key(w).
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { GRevLex, Lex, Elimination };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder grevlex(int nvars) { return {Kind::GRevLex, nvars, 0}; }
  static constexpr MonomialOrder lex(int nvars) { return {Kind::Lex, nvars, 0}; }
  /// Block order: the last `k` variables form a block that dominates the rest;
  /// grevlex inside each block.
  static MonomialOrder elimination(int nvars, int k) {
    if (k <= 0 || k >= nvars) throw Error(ErrorCode::InvalidArgument, "elimination block size out of range");
    return {Kind::Elimination, nvars, k};
  }

  Kind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  int eliminated() const { return elim_; }
  MonomialOrder with_nvars(int n) const {
    return kind_ == Kind::Elimination ? elimination(n, elim_) : MonomialOrder{kind_, n, 0};
  }

  std::int64_t key(const Monomial& m) const {
    switch (kind_) {
      case Kind::GRevLex:
        return grevlex_key(m, 0, nvars_);
      case Kind::Lex: {
        std::int64_t k = 0;
        for (int i = 0; i < nvars_; ++i) k = k * kWeight + m.exp[i];
        return k;
      }
      case Kind::Elimination: {
        int rest = nvars_ - elim_;
        return grevlex_key(m, rest, nvars_) * pow_weight(rest) + grevlex_key(m, 0, rest);
      }
    }
    return 0;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.comp != b.comp) return b.comp <=> a.comp;
    return key(a) <=> key(b);
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static constexpr std::int64_t kWeight = 2048;  // exponents stay below 2^11

  constexpr MonomialOrder(Kind k, int n, int e) : kind_(k), nvars_(n), elim_(e) {}

  static std::int64_t pow_weight(int n) {
    std::int64_t w = 1;
    for (int i = 0; i < n; ++i) w *= kWeight;
    return w;
  }
  // grevlex on variables [lo, hi): degree first, then the smaller exponent of
  // the last variable wins, and so on towards the first.
  static std::int64_t grevlex_key(const Monomial& m, int lo, int hi) {
    std::int64_t deg = 0;
    for (int i = lo; i < hi; ++i) deg += m.exp[i];
    std::int64_t k = deg;
    for (int i = hi - 1; i > lo; --i) k = k * kWeight - m.exp[i];
    return k;
  }

  Kind kind_ = Kind::GRevLex;
  int nvars_ = 2;
  int elim_ = 0;
};

}  // namespace brim

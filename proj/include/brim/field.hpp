#pragma once

// Coefficient types: exact rationals (GMP-backed) and a prime field Z/pZ.
// Both model the same minimal interface used by the polynomial templates:
// construction from long, + - * / and unary -, ==, is_zero(), to_string().

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <string>

#include "brim/error.hpp"

namespace brim {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& n, const Integer& d) : v_(n, d) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }
  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

/// Z/PZ for a prime P < 2^32. Elements are kept in [0, P).
template <std::uint32_t P = 2147483647u>
class Zp {
 public:
  static constexpr std::uint32_t modulus = P;

  Zp() = default;
  Zp(long v) {  // NOLINT(google-explicit-constructor)
    long r = v % static_cast<long>(P);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + static_cast<long>(P) : r);
  }
  explicit Zp(const Integer& n) {
    Integer r = n % P;
    if (r < 0) r += P;
    v_ = static_cast<std::uint32_t>(r.get_ui());
  }
  explicit Zp(const Rational& q) : Zp(Zp(q.numerator()) / Zp(q.denominator())) {}

  Zp& operator+=(Zp o) {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= P ? s - P : s);
    return *this;
  }
  Zp& operator-=(Zp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + P - o.v_);
    return *this;
  }
  Zp& operator*=(Zp o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % P);
    return *this;
  }
  Zp& operator/=(Zp o) { return *this *= o.inverse(); }
  friend Zp operator+(Zp a, Zp b) { return a += b; }
  friend Zp operator-(Zp a, Zp b) { return a -= b; }
  friend Zp operator*(Zp a, Zp b) { return a *= b; }
  friend Zp operator/(Zp a, Zp b) { return a /= b; }
  Zp operator-() const { return Zp() - *this; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

  Zp inverse() const {
    if (v_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
    // Fermat: a^(P-2)
    Zp r(1), b = *this;
    for (std::uint64_t e = P - 2; e; e >>= 1) {
      if (e & 1) r *= b;
      b *= b;
    }
    return r;
  }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint32_t value() const { return v_; }
  std::string to_string() const { return std::to_string(v_); }

 private:
  std::uint32_t v_ = 0;
};

using Fp = Zp<>;

/// Z/pZ with the prime chosen at run time, per thread. Used by the
/// multi-modular Gröbner engine, which walks through many primes.
class ModP {
 public:
  static std::uint32_t prime() { return p_; }
  static void set_prime(std::uint32_t p) { p_ = p; }

  ModP() = default;
  ModP(long v) {  // NOLINT(google-explicit-constructor)
    long r = v % static_cast<long>(p_);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  explicit ModP(const Integer& n) { v_ = static_cast<std::uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), p_)); }

  ModP& operator+=(ModP o) {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  ModP& operator-=(ModP o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
    return *this;
  }
  ModP& operator*=(ModP o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
    return *this;
  }
  ModP& operator/=(ModP o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  ModP operator-() const { return ModP() - *this; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP inverse() const {
    if (v_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x = 1, y = 0;
    while (b) {
      std::int64_t q = a / b;
      std::swap(a -= q * b, b);
      std::swap(x -= q * y, y);
    }
    ModP r;
    r.v_ = static_cast<std::uint32_t>(x < 0 ? x + p_ : x);
    return r;
  }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint32_t value() const { return v_; }
  std::string to_string() const { return std::to_string(v_); }

 private:
  static inline thread_local std::uint32_t p_ = 2147483647u;
  std::uint32_t v_ = 0;
};

inline bool is_zero(ModP a) { return a.is_zero(); }
inline std::string to_string(ModP a) { return a.to_string(); }

inline bool is_zero(const Rational& a) { return a.is_zero(); }
template <std::uint32_t P>
bool is_zero(Zp<P> a) { return a.is_zero(); }
inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

inline std::string to_string(const Rational& a) { return a.to_string(); }
template <std::uint32_t P>
std::string to_string(Zp<P> a) { return a.to_string(); }
inline std::string to_string(const Integer& a) { return a.get_str(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }
template <std::uint32_t P>
std::ostream& operator<<(std::ostream& os, Zp<P> a) { return os << a.to_string(); }

/// Maps a field to the coefficient ring used inside Buchberger's algorithm.
/// Over Q the engine works fraction-free on primitive integer polynomials.
template <class K>
struct field_traits {
  using work_type = K;
  static constexpr bool fraction_free = false;
  static constexpr const char* name = "fp";
};

template <>
struct field_traits<Rational> {
  using work_type = Integer;
  static constexpr bool fraction_free = true;
  static constexpr const char* name = "q";
};

/// Lifts an exact rational into K (used for parsed input and sampled constants).
template <class K>
K from_rational(const Rational& q) {
  if constexpr (std::is_same_v<K, Rational>) {
    return q;
  } else {
    return K(q);
  }
}

}  // namespace brim

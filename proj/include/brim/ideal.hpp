#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "brim/groebner.hpp"

namespace brim {

/// Certified length of R/a in the localization at m = (x, y), computed as
/// dim_k k[x,y]/(a + m^N).
///
/// The values v_N = dim R/(a + m^N) increase strictly until m^N lies in the
/// origin-primary component of a and are constant afterwards. Hence either
/// v_N < N, or v_N == v_{N+1}, certifies that v_N is the local length.
struct LocalLengthReport {
  enum class Witness { BelowTruncation, Consecutive };
  std::size_t value = 0;
  int truncation = 0;
  std::size_t next_value = 0;  // v_{N+1}; equals value for Witness::Consecutive
  Witness witness = Witness::BelowTruncation;
};

template <class K>
class Ideal {
 public:
  Ideal() : Ideal(std::vector<Polynomial<K>>{}) {}
  explicit Ideal(std::vector<Polynomial<K>> gens) : cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.nvars() != 2) throw Error(ErrorCode::ArityMismatch, "ideals live in k[x,y]");
      if (g.rank() != 1) throw Error(ErrorCode::KindMismatch, "ideal generators must be ring elements");
      if (!g.is_zero()) gens_.push_back(g.reordered(MonomialOrder::grevlex(2)));
    }
  }
  Ideal(std::initializer_list<Polynomial<K>> gens) : Ideal(std::vector<Polynomial<K>>(gens)) {}

  static Ideal unit() { return Ideal({Polynomial<K>::constant(K(1))}); }
  static Ideal maximal() { return Ideal({Polynomial<K>::variable(0), Polynomial<K>::variable(1)}); }

  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced grevlex basis, computed once per ideal value and shared by copies.
  const GroebnerBasis<K>& groebner_basis() const {
    std::call_once(cache_->gb_once, [&] {
      if (gens_.empty()) {
        cache_->gb.emplace(std::vector<Polynomial<K>>{Polynomial<K>(2)}, MonomialOrder::grevlex(2), 1, true,
                           std::nullopt);
      } else {
        cache_->gb.emplace(groebner(gens_, MonomialOrder::grevlex(2)));
      }
    });
    return *cache_->gb;
  }

  bool is_unit() const { return !gens_.empty() && groebner_basis().is_unit(); }
  bool contains(const Polynomial<K>& f) const { return f.is_zero() || (!gens_.empty() && is_member(f, groebner_basis())); }
  bool contains(const Ideal& b) const {
    for (const auto& g : b.gens_)
      if (!contains(g)) return false;
    return true;
  }
  friend bool operator==(const Ideal& a, const Ideal& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.groebner_basis() == b.groebner_basis();
  }

  /// Memo slot for local_colength; filled once.
  template <class F>
  const LocalLengthReport& local_report(F&& compute) const {
    std::call_once(cache_->local_once, [&] { cache_->local = compute(); });
    return *cache_->local;
  }

 private:
  struct Cache {
    std::once_flag gb_once;
    std::optional<GroebnerBasis<K>> gb;
    std::once_flag local_once;
    std::optional<LocalLengthReport> local;
  };
  std::vector<Polynomial<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

inline constexpr int kMaxIdealPower = 64;

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal<K>(std::move(g));
}

/// Drops repeated generators; for monomial generators keeps only the
/// minimal ones (powers of monomial ideals repeat heavily).
template <class K>
std::vector<Polynomial<K>> dedupe(std::vector<Polynomial<K>> g) {
  const bool monomial = std::all_of(g.begin(), g.end(), [](const auto& p) { return p.size() == 1; });
  std::vector<Polynomial<K>> out;
  if (monomial) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Monomial& m = g[i].leading_monomial();
      bool redundant = false;
      for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
        const Monomial& o = g[j].leading_monomial();
        redundant = j != i && divides(o, m) && (!(o == m) || j < i);
      }
      if (!redundant) out.push_back(Polynomial<K>::term(K(1), m, g[i].nvars(), g[i].order()));
    }
    return out;
  }
  for (auto& p : g) {
    bool seen = false;
    for (const auto& q : out)
      if (q == p) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(p));
  }
  return out;
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
  std::vector<Polynomial<K>> g;
  for (const auto& f : a.generators())
    for (const auto& h : b.generators()) g.push_back(f * h);
  return Ideal<K>(dedupe(std::move(g)));
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, int n) {
  if (n < 0 || n > kMaxIdealPower) throw Error(ErrorCode::PowerCap, "ideal power must lie in [0, 64]");
  Ideal<K> r = Ideal<K>::unit();
  for (int i = 0; i < n; ++i) r = i == 0 ? a : ideal_product(r, a);
  return r;
}

/// Exact quotient f / g; throws if g does not divide f.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  Polynomial<K> h = f.reordered(g.order());
  Polynomial<K> q(g.nvars(), g.order());
  while (!h.is_zero()) {
    if (!divides(g.leading_monomial(), h.leading_monomial()))
      throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
    const K c = h.leading_coefficient() / g.leading_coefficient();
    const Monomial m = quotient(h.leading_monomial(), g.leading_monomial());
    q += Polynomial<K>::term(c, m, g.nvars(), g.order());
    h -= g.mul_term(c, m);
  }
  return q;
}

/// a ∩ b: eliminate t from t*a + (1 - t)*b in k[x,y,t].
template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.is_zero() || b.is_zero()) return Ideal<K>();
  const MonomialOrder elim = MonomialOrder::elimination(3, 1);
  const auto t = Polynomial<K>::term(K(1), var_power(2, 1), 3, elim);
  const auto one_minus_t = Polynomial<K>::term(K(1), Monomial{}, 3, elim) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.generators()) gens.push_back(t * extend(f, elim));
  for (const auto& f : b.generators()) gens.push_back(one_minus_t * extend(f, elim));
  const auto gb = groebner(gens, elim);
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.elements()) {
    if (g.is_zero()) continue;
    bool has_t = false;
    for (const auto& term : g.terms()) has_t = has_t || term.mono.exp[2] != 0;
    if (!has_t) out.push_back(g.reordered(MonomialOrder::grevlex(3)).reordered(MonomialOrder::grevlex(2)));
  }
  return Ideal<K>(std::move(out));
}

/// a : (f) = (a ∩ (f)) / f.
template <class K>
Ideal<K> colon(const Ideal<K>& a, const Polynomial<K>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroIdeal, "colon by the zero polynomial");
  const auto cap = intersect(a, Ideal<K>({f}));
  std::vector<Polynomial<K>> out;
  for (const auto& g : cap.generators()) out.push_back(divide_exact(g, f.reordered(g.order())));
  return Ideal<K>(std::move(out));
}

/// a : b = ∩_g (a : g) over the generators g of b.
template <class K>
Ideal<K> colon(const Ideal<K>& a, const Ideal<K>& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroIdeal, "colon by the zero ideal");
  std::optional<Ideal<K>> acc;
  for (const auto& g : b.generators()) {
    Ideal<K> q = colon(a, g);
    acc = acc ? intersect(*acc, q) : q;
    if (acc->is_unit()) continue;
  }
  return *acc;
}

/// Leading-term ideal holds pure powers of x and y. The unit ideal is excluded.
template <class K>
bool is_m_primary(const Ideal<K>& a) {
  if (a.is_zero() || a.is_unit()) return false;
  bool px = false, py = false;
  for (const auto& m : a.groebner_basis().leading_monomials()) {
    px = px || (m.exp[1] == 0 && m.exp[0] > 0);
    py = py || (m.exp[0] == 0 && m.exp[1] > 0);
  }
  return px && py;
}

namespace detail {

/// dim_k F / (span(gens) + m^n F) for elements of F = R^rank.
template <class K>
std::size_t truncated_length(std::vector<Polynomial<K>> gens, int rank, int n) {
  const auto order = MonomialOrder::grevlex(2);
  if (gens.empty()) gens.push_back(Polynomial<K>(2, order, rank));
  const auto gb = groebner(gens, order, GroebnerOptions{n});
  return *quotient_dimension(gb);
}

inline int next_truncation(int n) { return n < 8 ? n * 2 : n + n / 2; }

template <class K>
LocalLengthReport certified_local_length(const std::vector<Polynomial<K>>& gens, int rank) {
  for (int n = 4; n <= kMaxDegree; n = next_truncation(n)) {
    const std::size_t v = truncated_length(gens, rank, n);
    if (v < static_cast<std::size_t>(n)) return LocalLengthReport{v, n, v, LocalLengthReport::Witness::BelowTruncation};
    const std::size_t w = truncated_length(gens, rank, n + 1);
    if (v == w) return LocalLengthReport{v, n, w, LocalLengthReport::Witness::Consecutive};
  }
  throw Error(ErrorCode::NonFinite, "local length does not stabilize below the degree cap");
}

}  // namespace detail

/// dim_k k[x,y] / (a + m^n).
template <class K>
std::size_t truncated_colength(const Ideal<K>& a, int n) {
  return detail::truncated_length(a.generators(), 1, n);
}

template <class K>
LocalLengthReport local_colength(const Ideal<K>& a) {
  return a.local_report([&] { return detail::certified_local_length(a.generators(), 1); });
}

/// The origin-primary component of a, generated by the basis of a + m^N with
/// N past stabilization. Equal to a when a is already m-primary.
template <class K>
Ideal<K> local_component(const Ideal<K>& a) {
  const auto rep = local_colength(a);
  if (rep.value == 0) return Ideal<K>::unit();
  std::vector<Polynomial<K>> gens = a.generators();
  const auto gb = groebner(gens, MonomialOrder::grevlex(2), GroebnerOptions{rep.truncation});
  return Ideal<K>(gb.elements());
}

namespace detail {

/// Polynomials spanning (q : a) / q, for q given by a reduced basis of an
/// ideal containing m^n: the left kernel of f -> (f g_1, ..., f g_k) acting
/// on the standard monomials of q.
template <class F>
std::vector<Polynomial<F>> colon_kernel(const std::vector<Polynomial<F>>& qgb,
                                        const std::vector<Polynomial<F>>& agens, int n) {
  const auto order = MonomialOrder::grevlex(2);
  const auto basis = standard_monomials(GroebnerBasis<F>(qgb, order, 1, true, n)).monomials;
  const std::size_t d = basis.size(), k = agens.size(), width = (k + 1) * d;
  std::unordered_map<std::int64_t, std::size_t> index;
  for (std::size_t r = 0; r < d; ++r) index[order.key(basis[r])] = r;
  Reducer<F> red(n);
  for (const auto& g : qgb) red.add(g);
  std::vector<std::vector<F>> rows(d, std::vector<F>(width));
  for (std::size_t r = 0; r < d; ++r) {
    const auto s = Polynomial<F>::term(F(1), basis[r], 2, order);
    for (std::size_t i = 0; i < k; ++i) {
      const auto h = red.reduce(s * agens[i].reordered(order), true, static_cast<std::size_t>(-1), false);
      for (const auto& t : h.terms()) rows[r][i * d + index.at(t.key)] = t.coef;
    }
    rows[r][k * d + r] = F(1);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < k * d && rank < d; ++c) {
    std::size_t piv = rank;
    while (piv < d && is_zero(rows[piv][c])) ++piv;
    if (piv == d) continue;
    std::swap(rows[piv], rows[rank]);
    const F inv = F(1) / rows[rank][c];
    for (std::size_t j = c; j < width; ++j) rows[rank][j] *= inv;
    for (std::size_t r = rank + 1; r < d; ++r) {
      if (is_zero(rows[r][c])) continue;
      const F f = rows[r][c];
      for (std::size_t j = c; j < width; ++j)
        if (!is_zero(rows[rank][j])) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t r = rank; r < d; ++r) {
    std::vector<std::pair<F, Monomial>> raw;
    for (std::size_t j = 0; j < d; ++j)
      if (!is_zero(rows[r][k * d + j])) raw.emplace_back(rows[r][k * d + j], basis[j]);
    out.push_back(Polynomial<F>::from_terms(std::move(raw), 2, order));
  }
  return out;
}

/// q : a over Q for q ⊇ m^n given by its reduced basis. Images modulo primes
/// come from colon_kernel applied to the reduction of the rational basis, so
/// over Q the kernel is never larger: a candidate that contains q, is a
/// Gröbner basis, multiplies a into q, and has as many standard monomials as
/// a prime image, is the colon.
inline std::optional<std::vector<Polynomial<Integer>>> rational_colon(const std::vector<Polynomial<Rational>>& qgb,
                                                                      const std::vector<Polynomial<Rational>>& agens,
                                                                      int n) {
  const auto order = MonomialOrder::grevlex(2);
  std::vector<Polynomial<Integer>> qz, az;
  for (const auto& g : qgb) qz.push_back(clear_denominators(g));
  for (const auto& g : agens) az.push_back(clear_denominators(g.reordered(order)));
  std::vector<Monomial> qleads;
  for (const auto& g : qgb) qleads.push_back(g.leading_monomial());

  ModularProblem problem;
  problem.order = order;
  problem.trunc = n;
  problem.lucky_is_smaller = false;
  problem.image = [&]() -> std::optional<std::vector<Polynomial<ModP>>> {
    const std::uint32_t p = ModP::prime();
    std::vector<Polynomial<ModP>> qp, ap;
    for (const auto& g : qgb) {
      for (const auto& t : g.terms())
        if (mpz_divisible_ui_p(t.coef.value().get_den_mpz_t(), p)) return std::nullopt;
      qp.push_back(map_coefficients<ModP>(g, [](const Rational& c) {
        return ModP(c.numerator()) / ModP(c.denominator());
      }));
    }
    const auto check = buchberger<ModP>(qp, order, 1, n);
    std::vector<Monomial> leads;
    for (const auto& g : check) leads.push_back(g.leading_monomial());
    if (!(leads == qleads)) return std::nullopt;
    for (const auto& g : az) ap.push_back(map_coefficients<ModP>(g, [](const Integer& c) { return ModP(c); }));
    auto gens = qp;
    for (auto& f : colon_kernel(qp, ap, n)) gens.push_back(std::move(f));
    return buchberger<ModP>(std::move(gens), order, 1, n);
  };
  problem.certify = [&](const std::vector<Polynomial<Integer>>& cand) {
    if (!certify_truncated_basis(cand, qz, order, 1, n)) return false;
    Reducer<Integer> red(n);
    for (const auto& g : qz) red.add(g);
    for (const auto& c : cand) {
      if (c.leading_monomial().degree_xy() >= n) continue;
      for (const auto& g : az)
        if (!red.reduce(c * g, false).is_zero()) return false;
    }
    return true;
  };
  return modular_lift(problem);
}

}  // namespace detail

/// (b : a) localized at m, returned as an origin-primary ideal: with q the
/// origin-primary part of b and m^N ⊆ q, computes q : a inside k[x,y]/q.
template <class K>
Ideal<K> local_colon(const Ideal<K>& b, const Ideal<K>& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroIdeal, "colon by the zero ideal");
  const auto rep = local_colength(b);
  if (rep.value == 0) return Ideal<K>::unit();
  const int n = rep.truncation;
  const auto order = MonomialOrder::grevlex(2);
  const auto q = groebner(b.generators(), order, GroebnerOptions{n}).elements();
  if constexpr (std::is_same_v<K, Rational>) {
    if (auto lifted = detail::rational_colon(q, a.generators(), n)) {
      std::vector<Polynomial<Rational>> out;
      for (const auto& g : *lifted) out.push_back(detail::from_work<Rational>(g));
      return Ideal<K>(std::move(out));
    }
    return colon(local_component(b), a);
  } else {
    auto gens = q;
    std::vector<Polynomial<K>> agens;
    for (const auto& g : a.generators()) agens.push_back(g.reordered(order));
    for (auto& f : detail::colon_kernel(q, agens, n)) gens.push_back(std::move(f));
    return Ideal<K>(std::move(gens));
  }
}

/// Equality of the localizations at m (both of finite local colength).
template <class K>
bool local_equal(const Ideal<K>& a, const Ideal<K>& b) {
  const auto ra = local_colength(a);
  const auto rb = local_colength(b);
  if (ra.value != rb.value) return false;
  if (ra.value == 0) return true;
  const int n = std::max(ra.truncation, rb.truncation);
  const auto ga = groebner(a.generators(), MonomialOrder::grevlex(2), GroebnerOptions{n});
  const auto gb = groebner(b.generators(), MonomialOrder::grevlex(2), GroebnerOptions{n});
  return ga == gb;
}

/// b ⊆ a after localizing at m (a of finite local colength).
template <class K>
bool locally_contains(const Ideal<K>& a, const Ideal<K>& b) {
  const auto ra = local_colength(a);
  if (ra.value == 0) return true;
  const auto ga = groebner(a.generators(), MonomialOrder::grevlex(2), GroebnerOptions{ra.truncation});
  for (const auto& g : b.generators())
    if (!is_member(g, ga)) return false;
  return true;
}

/// μ(a) = ℓ(R/m·a) - ℓ(R/a) for a locally m-primary.
template <class K>
std::size_t local_mingens(const Ideal<K>& a) {
  const auto la = local_colength(a);
  if (la.value == 0) throw Error(ErrorCode::NotMPrimary, "unit ideal has no minimal generators count here");
  return local_colength(ideal_product(Ideal<K>::maximal(), a)).value - la.value;
}

}  // namespace brim

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "brim/polynomial.hpp"

namespace brim {

/// A vector of polynomials of length r: an element of the free module R^r.
template <class K>
using FreeModuleElement = std::vector<Polynomial<K>>;

/// Flattens a column vector into a rank-r polynomial under position-over-term.
template <class K>
Polynomial<K> pack(const FreeModuleElement<K>& v, MonomialOrder order) {
  if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty module element");
  const int r = static_cast<int>(v.size());
  Polynomial<K> out(order.nvars(), order, r);
  for (int i = 0; i < r; ++i) {
    if (v[i].rank() != 1) throw Error(ErrorCode::KindMismatch, "module entries must be ring elements");
    if (v[i].nvars() != order.nvars()) throw Error(ErrorCode::ArityMismatch, "entry arity differs");
    out += v[i].reordered(order).placed(i, r);
  }
  return out;
}

template <class K>
FreeModuleElement<K> unpack(const Polynomial<K>& p) {
  FreeModuleElement<K> v;
  for (int i = 0; i < p.rank(); ++i) v.push_back(p.component(i));
  return v;
}

struct GroebnerOptions {
  /// When set to N, computes a basis of (gens) + m^N F, m = (x, y): terms of
  /// x,y-degree >= N are discarded during every reduction.
  std::optional<int> truncate_xy;
};

/// Reduced Gröbner basis: monic elements, sorted by increasing leading term.
template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial<K>> elems, MonomialOrder order, int rank, bool reduced,
                std::optional<int> truncation)
      : elems_(std::move(elems)), order_(order), rank_(rank), reduced_(reduced), truncation_(truncation) {}

  const std::vector<Polynomial<K>>& elements() const { return elems_; }
  const MonomialOrder& order() const { return order_; }
  int nvars() const { return order_.nvars(); }
  int rank() const { return rank_; }
  bool is_reduced() const { return reduced_; }
  std::size_t size() const { return elems_.size(); }
  /// The truncation degree N when this is a basis of (gens) + m^N F.
  std::optional<int> truncation() const { return truncation_; }
  bool is_unit() const {
    return std::any_of(elems_.begin(), elems_.end(), [&](const auto& g) { return g.leading_monomial().is_one(); });
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elems_) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.rank_ == b.rank_ && a.elems_ == b.elems_;
  }

 private:
  std::vector<Polynomial<K>> elems_;
  MonomialOrder order_;
  int rank_;
  bool reduced_;
  std::optional<int> truncation_;
};

namespace detail {

/// Division engine over a coefficient ring W. For W = Integer the reduction
/// is fraction-free (h <- a*h - b*m*g with a, b coprime); otherwise W is a
/// field and h <- h - (lc(h)/lc(g))*m*g.
template <class W>
class Reducer {
 public:
  Reducer(std::optional<int> trunc) : trunc_(trunc) {}

  std::size_t add(Polynomial<W> g) {
    lms_.push_back(g.leading_monomial());
    polys_.push_back(std::move(g));
    active_.push_back(true);
    return polys_.size() - 1;
  }
  void deactivate(std::size_t i) { active_[i] = false; }
  bool active(std::size_t i) const { return active_[i]; }
  const Polynomial<W>& poly(std::size_t i) const { return polys_[i]; }
  void replace(std::size_t i, Polynomial<W> g) {
    lms_[i] = g.leading_monomial();
    polys_[i] = std::move(g);
  }
  std::size_t size() const { return polys_.size(); }

  /// Reduces h by the active elements (excluding `skip`). With `full`, tail
  /// terms are reduced as well.
  Polynomial<W> reduce(const Polynomial<W>& h, bool full, std::size_t skip = static_cast<std::size_t>(-1),
                       bool normalize_result = true) const {
    Polynomial<W> out(h.nvars(), h.order(), h.rank());
    std::vector<Term<W>> rem;
    std::vector<Term<W>> cur;
    cur.reserve(h.size());
    for (const auto& t : h.terms())
      if (!trunc_ || t.mono.degree_xy() < *trunc_) cur.push_back(t);
    std::size_t pos = 0;
    std::vector<Term<W>> next;
    int steps = 0;
    while (pos < cur.size()) {
      const Term<W>& lt = cur[pos];
      std::size_t gi = find_divisor(lt.mono, skip);
      if (gi == static_cast<std::size_t>(-1)) {
        rem.push_back(lt);
        ++pos;
        if (!full) break;
        continue;
      }
      const Polynomial<W>& g = polys_[gi];
      const Monomial q = quotient(lt.mono, g.leading_monomial());
      const std::int64_t qkey = h.order().key(q);
      W a, b;
      multipliers(lt.coef, g.leading_coefficient(), a, b);
      const bool scale = !is_one(a);
      next.clear();
      next.reserve(cur.size() - pos + g.size());
      std::size_t i = pos + 1, j = 1;
      const auto& gt = g.terms();
      auto push_g = [&](std::size_t jj) {
        Term<W> t{W(b * gt[jj].coef), gt[jj].mono * q, gt[jj].key + qkey};
        t.coef = -t.coef;
        next.push_back(std::move(t));
      };
      while (i < cur.size() || j < gt.size()) {
        if (j < gt.size() && trunc_ && gt[j].mono.degree_xy() + q.degree_xy() >= *trunc_) {
          ++j;
          continue;
        }
        bool take_cur;
        bool both = false;
        if (j == gt.size()) {
          take_cur = true;
        } else if (i == cur.size()) {
          take_cur = false;
        } else {
          const Term<W>& c = cur[i];
          const std::uint16_t gc = gt[j].mono.comp;
          const std::int64_t gk = gt[j].key + qkey;
          if (c.mono.comp != gc) {
            take_cur = c.mono.comp < gc;
          } else if (c.key != gk) {
            take_cur = c.key > gk;
          } else {
            both = true;
            take_cur = false;
          }
        }
        if (both) {
          W c = scale ? W(a * cur[i].coef) : cur[i].coef;
          c -= b * gt[j].coef;
          if (!coef_zero(c)) next.push_back({std::move(c), cur[i].mono, cur[i].key});
          ++i;
          ++j;
        } else if (take_cur) {
          if (scale) {
            next.push_back({W(a * cur[i].coef), cur[i].mono, cur[i].key});
          } else {
            next.push_back(cur[i]);
          }
          ++i;
        } else {
          push_g(j);
          ++j;
        }
      }
      if (scale)
        for (auto& t : rem) t.coef *= a;
      std::swap(cur, next);
      pos = 0;
      if constexpr (std::is_same_v<W, Integer>) {
        if (++steps % 8 == 0) remove_common_content(rem, cur);
      }
    }
    if (pos < cur.size()) rem.insert(rem.end(), cur.begin() + static_cast<long>(pos), cur.end());
    out.mutable_terms() = std::move(rem);
    if (normalize_result) normalize(out);
    return out;
  }

  std::size_t find_divisor(const Monomial& m, std::size_t skip) const {
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i] || i == skip) continue;
      if (divides(lms_[i], m) && (best == static_cast<std::size_t>(-1) || polys_[i].size() < polys_[best].size()))
        best = i;
    }
    return best;
  }

  static void normalize(Polynomial<W>& p) {
    if constexpr (std::is_same_v<W, Integer>) {
      make_primitive(p);
    } else {
      if (!p.is_zero() && !p.leading_coefficient().is_one()) p = monic(p);
    }
  }

 private:
  static bool is_one(const W& a) {
    if constexpr (std::is_same_v<W, Integer>) {
      return a == 1;
    } else {
      return a.is_one();
    }
  }

  static void multipliers(const W& lh, const W& lg, W& a, W& b) {
    if constexpr (std::is_same_v<W, Integer>) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), lh.get_mpz_t(), lg.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), lg.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), lh.get_mpz_t(), g.get_mpz_t());
      if (sgn(a) < 0) {
        a = -a;
        b = -b;
      }
    } else {
      a = W(1);
      b = lh / lg;
    }
  }

  static void remove_common_content(std::vector<Term<Integer>>& rem, std::vector<Term<Integer>>& cur) {
    Integer g = 0;
    for (const auto* v : {&rem, &cur})
      for (const auto& t : *v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
        if (g == 1) return;
      }
    if (g <= 1) return;
    for (auto* v : {&rem, &cur})
      for (auto& t : *v) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
  }

  std::optional<int> trunc_;
  std::vector<Polynomial<W>> polys_;
  std::vector<Monomial> lms_;
  std::vector<bool> active_;
};

template <class W>
Polynomial<W> to_work(const Polynomial<W>& p) {
  return p;
}
inline Polynomial<Integer> to_work(const Polynomial<Rational>& p) { return clear_denominators(p); }

template <class K, class W>
Polynomial<K> from_work(const Polynomial<W>& p) {
  if constexpr (std::is_same_v<K, W>) {
    return monic(p);
  } else {
    return monic(map_coefficients<K>(p, [](const W& c) { return K(c); }));
  }
}

/// S-polynomial of f and g (same leading component), fraction-free over Z.
template <class W>
Polynomial<W> s_polynomial(const Polynomial<W>& f, const Polynomial<W>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Monomial qf = quotient(l, f.leading_monomial());
  const Monomial qg = quotient(l, g.leading_monomial());
  if constexpr (std::is_same_v<W, Integer>) {
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f.leading_coefficient().get_mpz_t(), g.leading_coefficient().get_mpz_t());
    Integer a = g.leading_coefficient() / gcd;
    Integer b = f.leading_coefficient() / gcd;
    return f.mul_term(a, qf) - g.mul_term(b, qg);
  } else {
    return f.mul_term(W(1) / f.leading_coefficient(), qf) - g.mul_term(W(1) / g.leading_coefficient(), qg);
  }
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
  std::int64_t key;
  bool operator<(const CriticalPair& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (lcm.comp != o.lcm.comp) return lcm.comp > o.lcm.comp;
    if (key != o.key) return key < o.key;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

/// Gebauer-Moeller bookkeeping over leading monomials: element ids are
/// installed in order, and the surviving pairs suffice for Buchberger's
/// criterion on the installed set.
class PairQueue {
 public:
  PairQueue(MonomialOrder order, bool ideal) : order_(order), ideal_(ideal) {}

  /// Installs the next element; returns the ids leaving the basis because
  /// the new leading monomial divides theirs.
  std::vector<std::size_t> insert(const Monomial& lh) {
    const std::size_t h = leads_.size();
    leads_.push_back(lh);
    std::vector<CriticalPair> cands;
    for (std::size_t g : basis_)
      if (leads_[g].comp == lh.comp) cands.push_back(make_pair(h, g));
    // Pairs whose lcm is a multiple of another candidate's lcm are redundant;
    // coprime pairs survive this pass so they can eliminate others.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const auto& p = cands[a];
      bool drop = false;
      if (!is_coprime(p)) {
        for (std::size_t b = a + 1; b < cands.size() && !drop; ++b) drop = divides(cands[b].lcm, p.lcm);
        for (std::size_t b = 0; b < kept.size() && !drop; ++b) drop = divides(kept[b].lcm, p.lcm);
      }
      if (!drop) kept.push_back(p);
    }
    std::set<CriticalPair> next;
    for (const auto& p : pairs_) {
      if (divides(lh, p.lcm) && !(lcm(leads_[p.i], lh) == p.lcm) && !(lcm(leads_[p.j], lh) == p.lcm)) continue;
      next.insert(p);
    }
    for (const auto& p : kept)
      if (!is_coprime(p)) next.insert(p);
    pairs_.swap(next);
    std::vector<std::size_t> nb, gone;
    for (std::size_t g : basis_) (divides(lh, leads_[g]) ? gone : nb).push_back(g);
    nb.push_back(h);
    basis_.swap(nb);
    return gone;
  }

  bool empty() const { return pairs_.empty(); }
  CriticalPair pop() {
    CriticalPair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    return p;
  }
  const std::vector<std::size_t>& basis() const { return basis_; }

 private:
  CriticalPair make_pair(std::size_t i, std::size_t j) const {
    const Monomial l = lcm(leads_[i], leads_[j]);
    return CriticalPair{std::min(i, j), std::max(i, j), l, l.degree(), order_.key(l)};
  }
  bool is_coprime(const CriticalPair& p) const { return ideal_ && coprime(leads_[p.i], leads_[p.j]); }

  MonomialOrder order_;
  bool ideal_;
  std::vector<Monomial> leads_;
  std::set<CriticalPair> pairs_;
  std::vector<std::size_t> basis_;
};

template <class W>
std::vector<Polynomial<W>> buchberger(std::vector<Polynomial<W>> gens, MonomialOrder order, int rank,
                                      std::optional<int> trunc) {
  Reducer<W> red(trunc);
  PairQueue queue(order, rank == 1);
  auto update = [&](std::size_t h) {
    for (std::size_t g : queue.insert(red.poly(h).leading_monomial())) red.deactivate(g);
  };

  // The generators of m^N F enter unreduced: reduction modulo them is the
  // truncation built into the Reducer.
  if (trunc) {
    for (int c = 0; c < rank; ++c)
      for (int a = 0; a <= *trunc; ++a) {
        Monomial m;
        m.exp[0] = static_cast<std::uint16_t>(a);
        m.exp[1] = static_cast<std::uint16_t>(*trunc - a);
        m.comp = static_cast<std::uint16_t>(c);
        update(red.add(Polynomial<W>::term(W(1), m, order.nvars(), order, rank)));
      }
  }
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
    return detail::term_greater(b.leading_term(), a.leading_term());
  });
  for (auto& g : gens) {
    Polynomial<W> h = red.reduce(g, true);
    if (h.is_zero()) continue;
    update(red.add(std::move(h)));
  }
  while (!queue.empty()) {
    CriticalPair p = queue.pop();
    Polynomial<W> s = s_polynomial(red.poly(p.i), red.poly(p.j));
    Polynomial<W> h = red.reduce(s, true);
    if (h.is_zero()) continue;
    update(red.add(std::move(h)));
  }

  // Minimal basis, then inter-reduce tails.
  std::vector<std::size_t> minimal;
  const auto& basis = queue.basis();
  for (std::size_t g : basis) {
    bool redundant = false;
    for (std::size_t o : basis)
      if (o != g && divides(red.poly(o).leading_monomial(), red.poly(g).leading_monomial()) &&
          !(red.poly(o).leading_monomial() == red.poly(g).leading_monomial() && o > g))
        redundant = true;
    if (!redundant) minimal.push_back(g);
  }
  Reducer<W> fin(trunc);
  for (std::size_t g : minimal) fin.add(red.poly(g));
  std::vector<Polynomial<W>> out;
  for (std::size_t i = 0; i < fin.size(); ++i) {
    const auto& g = fin.poly(i);
    out.push_back(trunc && g.leading_monomial().degree_xy() >= *trunc ? g : fin.reduce(g, true, i));
  }
  for (auto& g : out) Reducer<W>::normalize(g);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return detail::term_greater(b.leading_term(), a.leading_term()); });
  return out;
}

/// A basis over Q recovered from its images modulo primes. `image` computes
/// the reduced basis modulo ModP::prime() (nullopt skips the prime); among
/// primes whose leading terms disagree, the lucky ones have the smaller
/// quotient when `lucky_is_smaller`, the larger one otherwise. `certify`
/// decides whether a lifted candidate is the answer over Q.
struct ModularProblem {
  MonomialOrder order;
  int rank = 1;
  int trunc = 0;
  bool lucky_is_smaller = true;
  std::function<std::optional<std::vector<Polynomial<ModP>>>()> image;
  std::function<bool(const std::vector<Polynomial<Integer>>&)> certify;
};

std::optional<std::vector<Polynomial<Integer>>> modular_lift(const ModularProblem& problem);

/// True when `basis` together with m^N F is a Gröbner basis over Q and every
/// generator reduces to zero modulo it.
bool certify_truncated_basis(const std::vector<Polynomial<Integer>>& basis,
                             const std::vector<Polynomial<Integer>>& gens, MonomialOrder order, int rank, int trunc);

/// Multi-modular basis of (gens) + m^N F over Q for gens in two variables:
/// bases modulo several primes are lifted by Chinese remaindering and
/// rational reconstruction, then certified over Q. Returns nullopt when no
/// certified lift is found, in which case the caller runs Buchberger over Z.
std::optional<std::vector<Polynomial<Integer>>> modular_truncated_basis(const std::vector<Polynomial<Integer>>& gens,
                                                                        MonomialOrder order, int rank, int trunc);

}  // namespace detail

/// Reduced Gröbner basis of the ideal (rank 1) or submodule (rank r) spanned by
/// gens, under `order` (extended position-over-term on modules).
template <class K>
GroebnerBasis<K> groebner(const std::vector<Polynomial<K>>& gens, MonomialOrder order, GroebnerOptions opts = {}) {
  using W = typename field_traits<K>::work_type;
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "empty generator list");
  const int rank = gens.front().rank();
  std::vector<Polynomial<W>> work;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw Error(ErrorCode::KindMismatch, "generators of different rank");
    if (g.nvars() != order.nvars()) throw Error(ErrorCode::ArityMismatch, "generator arity differs from order");
    if (g.is_zero()) continue;
    work.push_back(detail::to_work(g.reordered(order)));
  }
  std::optional<std::vector<Polynomial<W>>> lifted;
  if constexpr (std::is_same_v<W, Integer>) {
    if (opts.truncate_xy && order.nvars() == 2 && !work.empty())
      lifted = detail::modular_truncated_basis(work, order, rank, *opts.truncate_xy);
  }
  auto basis = lifted ? std::move(*lifted) : detail::buchberger<W>(std::move(work), order, rank, opts.truncate_xy);
  std::vector<Polynomial<K>> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(detail::from_work<K>(g));
  if (out.empty()) out.push_back(Polynomial<K>(order.nvars(), order, rank));  // zero ideal
  return GroebnerBasis<K>(std::move(out), order, rank, true, opts.truncate_xy);
}

template <class K>
GroebnerBasis<K> groebner(const std::vector<FreeModuleElement<K>>& gens, MonomialOrder order,
                          GroebnerOptions opts = {}) {
  std::vector<Polynomial<K>> packed;
  for (const auto& v : gens) packed.push_back(pack(v, order));
  return groebner(packed, order, opts);
}

/// Remainder of f on division by gb: no term is divisible by a leading monomial.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  if (f.nvars() != gb.nvars()) throw Error(ErrorCode::ArityMismatch, "arity differs from basis");
  if (f.rank() != gb.rank()) throw Error(ErrorCode::KindMismatch, "rank differs from basis");
  detail::Reducer<K> red(gb.truncation());
  for (const auto& g : gb.elements())
    if (!g.is_zero()) red.add(g);
  // Over a field the reducer never rescales, so the unnormalized remainder is exact.
  return red.reduce(f.reordered(gb.order()), true, static_cast<std::size_t>(-1), false);
}

template <class K>
FreeModuleElement<K> normal_form(const FreeModuleElement<K>& f, const GroebnerBasis<K>& gb) {
  if (static_cast<int>(f.size()) != gb.rank()) throw Error(ErrorCode::KindMismatch, "module rank differs");
  return unpack(normal_form(pack(f, gb.order()), gb));
}

template <class K>
bool is_member(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  detail::Reducer<K> red(gb.truncation());
  for (const auto& g : gb.elements())
    if (!g.is_zero()) red.add(g);
  return red.reduce(f.reordered(gb.order()), true).is_zero();
}

/// The monomials (times basis vectors) outside the leading-term module.
struct StandardMonomials {
  bool finite = true;
  std::vector<Monomial> monomials;
  std::size_t count() const { return monomials.size(); }
};

template <class K>
StandardMonomials standard_monomials(const GroebnerBasis<K>& gb, std::size_t limit = 5'000'000) {
  StandardMonomials out;
  const int n = gb.nvars();
  const auto lms = gb.leading_monomials();
  const bool zero = gb.elements().size() == 1 && gb.elements()[0].is_zero();
  for (int c = 0; c < gb.rank(); ++c) {
    std::array<int, kMaxVars> bound{1, 1, 1, 1};
    for (int v = 0; v < n; ++v) {
      int best = -1;
      if (!zero)
        for (const auto& m : lms) {
          if (m.comp != c) continue;
          bool pure = true;
          for (int w = 0; w < n; ++w)
            if (w != v && m.exp[w]) pure = false;
          if (pure && (best < 0 || m.exp[v] < best)) best = m.exp[v];
        }
      if (best < 0) {
        out.finite = false;
        out.monomials.clear();
        return out;
      }
      bound[v] = best;
    }
    Monomial m;
    m.comp = static_cast<std::uint16_t>(c);
    for (int a = 0; a < bound[0]; ++a)
      for (int b = 0; b < bound[1]; ++b)
        for (int d = 0; d < bound[2]; ++d)
          for (int e = 0; e < bound[3]; ++e) {
            m.exp = {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(d),
                     static_cast<std::uint16_t>(e)};
            bool std_mono = true;
            for (const auto& l : lms)
              if (divides(l, m)) {
                std_mono = false;
                break;
              }
            if (std_mono) {
              out.monomials.push_back(m);
              if (out.monomials.size() > limit) throw Error(ErrorCode::SizeCap, "too many standard monomials");
            }
          }
  }
  return out;
}

/// dim_k of the quotient, or nullopt when infinite. In two variables this
/// counts staircase columns instead of enumerating monomials.
template <class K>
std::optional<std::size_t> quotient_dimension(const GroebnerBasis<K>& gb) {
  if (gb.nvars() != 2) {
    auto sm = standard_monomials(gb);
    return sm.finite ? std::optional<std::size_t>(sm.count()) : std::nullopt;
  }
  if (gb.elements().size() == 1 && gb.elements()[0].is_zero()) return std::nullopt;
  const auto lms = gb.leading_monomials();
  std::size_t total = 0;
  for (int c = 0; c < gb.rank(); ++c) {
    int bx = -1;
    for (const auto& m : lms)
      if (m.comp == c && m.exp[1] == 0 && (bx < 0 || m.exp[0] < bx)) bx = m.exp[0];
    if (bx < 0) return std::nullopt;
    for (int a = 0; a < bx; ++a) {
      int height = -1;
      for (const auto& m : lms)
        if (m.comp == c && m.exp[0] <= a && (height < 0 || m.exp[1] < height)) height = m.exp[1];
      if (height < 0) return std::nullopt;
      total += static_cast<std::size_t>(height);
    }
  }
  return total;
}

/// Verifies that every S-polynomial of basis pairs reduces to zero.
template <class K>
bool satisfies_buchberger_criterion(const GroebnerBasis<K>& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (el[i].is_zero() || el[j].is_zero()) continue;
      if (el[i].leading_monomial().comp != el[j].leading_monomial().comp) continue;
      if (!normal_form(detail::s_polynomial(el[i], el[j]), gb).is_zero()) return false;
    }
  return true;
}

extern template GroebnerBasis<Rational> groebner(const std::vector<Polynomial<Rational>>&, MonomialOrder,
                                                 GroebnerOptions);
extern template GroebnerBasis<Fp> groebner(const std::vector<Polynomial<Fp>>&, MonomialOrder, GroebnerOptions);
extern template Polynomial<Rational> normal_form(const Polynomial<Rational>&, const GroebnerBasis<Rational>&);
extern template Polynomial<Fp> normal_form(const Polynomial<Fp>&, const GroebnerBasis<Fp>&);

}  // namespace brim

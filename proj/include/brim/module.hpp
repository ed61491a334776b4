#pragma once

#include <future>
#include <vector>

#include "brim/hilbert_samuel.hpp"
#include "brim/matrix.hpp"

namespace brim {

/// M ⊆ F = R^r given by the columns of an r x n matrix.
template <class K>
class ModulePresentation {
 public:
  ModulePresentation() = default;
  explicit ModulePresentation(PolyMatrix<K> m) : m_(std::move(m)) {
    if (m_.rows() < 1) throw Error(ErrorCode::InvalidArgument, "module needs rank >= 1");
    if (m_.cols() < 1) throw Error(ErrorCode::InvalidArgument, "module needs a generator");
  }

  const PolyMatrix<K>& matrix() const { return m_; }
  int rank() const { return m_.rows(); }
  int num_generators() const { return m_.cols(); }
  /// Columns as rank-r elements under position-over-term grevlex.
  std::vector<Polynomial<K>> packed() const {
    std::vector<Polynomial<K>> out;
    for (int j = 0; j < m_.cols(); ++j) out.push_back(pack(m_.column(j), MonomialOrder::grevlex(2)));
    return out;
  }
  Ideal<K> fitt0() const { return fitting_ideal(m_, 0); }

 private:
  PolyMatrix<K> m_;
};

/// l(F/M) at the origin via module truncation F/(M + m^N F).
template <class K>
LocalLengthReport module_colength(const ModulePresentation<K>& m) {
  return detail::certified_local_length(m.packed(), m.rank());
}

/// Every column of u lies in the column span of m.
template <class K>
bool module_contains(const ModulePresentation<K>& m, const ModulePresentation<K>& u) {
  if (m.rank() != u.rank()) throw Error(ErrorCode::KindMismatch, "modules in free modules of different rank");
  const auto gb = groebner(m.packed(), MonomialOrder::grevlex(2));
  for (const auto& c : u.packed())
    if (!is_member(c, gb)) return false;
  return true;
}

/// Rees: U ⊆ M is a reduction iff Fitt0(F/U) is a reduction of Fitt0(F/M),
/// decided by equal multiplicities.
template <class K>
bool is_reduction_module(const ModulePresentation<K>& u, const ModulePresentation<K>& m,
                         const GeneralElementSampler& sampler = {}) {
  if (!module_contains(m, u)) throw Error(ErrorCode::ContainmentViolated, "U is not contained in M");
  const auto fu = u.fitt0();
  const auto fm = m.fitt0();
  detail::require_m_primary(fm);
  if (!detail::try_local_colength(fu)) return false;
  return hilbert_samuel(fu, sampler) == hilbert_samuel(fm, sampler);
}

template <class K>
struct ModuleReduction {
  ModulePresentation<K> u;
  std::size_t colength = 0;  // l(R/Fitt0(F/U)) = br(M)
  std::vector<std::optional<std::size_t>> per_trial;
};

/// U spanned by r + 1 general combinations of the columns of M, certified by
/// the Rees test; the trial with the smallest l(R/Fitt0(F/U)) wins.
template <class K>
ModuleReduction<K> minimal_reduction_module(const ModulePresentation<K>& m, const GeneralElementSampler& sampler,
                                            std::uint64_t salt = 0) {
  const int r = m.rank();
  const auto fm = m.fitt0();
  detail::require_m_primary(fm);
  if (m.num_generators() <= r + 1) {
    const auto len = local_colength(fm).value;
    return ModuleReduction<K>{m, len, {len}};
  }
  const std::size_t target = hilbert_samuel(fm, sampler);
  std::vector<std::optional<std::size_t>> values;
  std::optional<ModuleReduction<K>> best;
  for (int t = 0; t < sampler.trials; ++t) {
    auto rng = sampler.stream(static_cast<std::uint64_t>(t), salt);
    ModulePresentation<K> u(m.matrix() * random_constant_matrix<K>(m.num_generators(), r + 1, rng, sampler.bound));
    const auto fu = u.fitt0();
    const auto len = detail::try_local_colength(fu);
    values.push_back(len);
    if (!len || (best && best->colength <= *len)) continue;
    GeneralElementSampler inner = sampler;
    inner.seed = sampler.seed * 1000003u + static_cast<std::uint64_t>(t) + 1;
    if (hilbert_samuel(fu, inner) != target) continue;
    best = ModuleReduction<K>{u, *len, {}};
  }
  if (!best) throw Error(ErrorCode::GenericityFailure, "no certified module reduction; trial colengths " + detail::trial_log(values));
  best->per_trial = values;
  return *best;
}

/// lambda(n) = l(S_n(F) / R_n(M)) for n = 1..N.
struct LambdaTable {
  std::vector<std::size_t> values;  // values[n - 1] = lambda(n)
  int order = 0;                    // d + r - 1
  std::vector<long> differences;    // order-th differences, first at n = order
  std::optional<std::size_t> br;    // stabilized difference
};

inline constexpr int kMaxLambdaN = 10;

namespace detail {

inline std::vector<std::vector<int>> exponent_vectors(int r, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == r - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

/// Generators of R_n(M) ⊆ S_n(F), packed over the monomial basis of S_n(F).
template <class K>
std::pair<std::vector<Polynomial<K>>, int> rees_component(const ModulePresentation<K>& m, int n) {
  const int r = m.rank();
  const auto basis = exponent_vectors(r, n);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  const int rank = static_cast<int>(basis.size());
  const auto order = MonomialOrder::grevlex(2);
  using Elem = std::map<std::vector<int>, Polynomial<K>>;
  std::vector<std::pair<Elem, int>> level{{Elem{{std::vector<int>(static_cast<std::size_t>(r), 0), Polynomial<K>::constant(K(1))}}, 0}};
  for (int d = 0; d < n; ++d) {
    std::vector<std::pair<Elem, int>> next;
    for (const auto& [el, last] : level)
      for (int j = last; j < m.num_generators(); ++j) {
        Elem prod;
        for (const auto& [alpha, p] : el)
          for (int i = 0; i < r; ++i) {
            const auto& c = m.matrix()(i, j);
            if (c.is_zero()) continue;
            auto beta = alpha;
            ++beta[static_cast<std::size_t>(i)];
            auto [it, fresh] = prod.try_emplace(beta, Polynomial<K>(2));
            it->second += p * c;
          }
        next.emplace_back(std::move(prod), j);
      }
    level = std::move(next);
  }
  std::vector<Polynomial<K>> gens;
  for (const auto& [el, last] : level) {
    Polynomial<K> v(2, order, rank);
    for (const auto& [alpha, p] : el) v += p.placed(index.at(alpha), rank);
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  return {gens, rank};
}

}  // namespace detail

/// The entries for distinct n are computed concurrently.
template <class K>
LambdaTable lambda_table(const ModulePresentation<K>& m, int n_max) {
  if (m.rank() > 3) throw Error(ErrorCode::SizeCap, "lambda table supports rank <= 3");
  if (n_max < 1 || n_max > kMaxLambdaN) throw Error(ErrorCode::SizeCap, "lambda table supports N <= 10");
  detail::require_m_primary(m.fitt0());
  std::vector<std::future<std::size_t>> jobs;
  for (int n = 1; n <= n_max; ++n)
    jobs.push_back(std::async(std::launch::async, [&m, n] {
      auto [gens, rank] = detail::rees_component(m, n);
      return detail::certified_local_length(gens, rank).value;
    }));
  LambdaTable t;
  for (auto& j : jobs) t.values.push_back(j.get());
  t.order = m.rank() + 1;
  std::vector<long> lam{0};
  for (auto v : t.values) lam.push_back(static_cast<long>(v));
  for (int n = t.order; n <= n_max; ++n) {
    long d = 0, binom = 1;
    for (int j = 0; j <= t.order; ++j) {
      d += (j % 2 ? -1 : 1) * binom * lam[static_cast<std::size_t>(n - j)];
      binom = binom * (t.order - j) / (j + 1);
    }
    t.differences.push_back(d);
  }
  const auto& df = t.differences;
  for (std::size_t k = 2; k < df.size(); ++k)
    if (df[k] == df[k - 1] && df[k - 1] == df[k - 2] && df[k] > 0) {
      t.br = static_cast<std::size_t>(df[k]);
      break;
    }
  return t;
}

/// br(M), by a certified minimal reduction (REDUCTION), the lambda table
/// (LAMBDA) or both (ALL).
template <class K>
MultiplicityReport buchsbaum_rim(const ModulePresentation<K>& m, Route route, const GeneralElementSampler& sampler = {},
                                 int lambda_n = kMaxLambdaN) {
  MultiplicityReport rep;
  rep.method = route;
  switch (route) {
    case Route::Reduction: {
      auto red = minimal_reduction_module(m, sampler);
      rep.value = red.colength;
      rep.per_trial = red.per_trial;
      rep.trials = static_cast<int>(red.per_trial.size());
      break;
    }
    case Route::Lambda: {
      auto t = lambda_table(m, lambda_n);
      if (!t.br) throw Error(ErrorCode::NoStabilization, "lambda differences did not settle");
      rep.value = *t.br;
      break;
    }
    case Route::All: {
      rep = buchsbaum_rim(m, Route::Reduction, sampler);
      rep.method = Route::All;
      rep.routes.clear();
      rep.routes.emplace_back(Route::Reduction, rep.value);
      if (m.rank() <= 3) rep.routes.emplace_back(Route::Lambda, buchsbaum_rim(m, Route::Lambda, sampler, lambda_n).value);
      for (const auto& [k, v] : rep.routes) rep.consistent = rep.consistent && v == rep.value;
      return rep;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "module routes are REDUCTION, LAMBDA and ALL");
  }
  rep.routes.emplace_back(route, rep.value);
  return rep;
}

}  // namespace brim

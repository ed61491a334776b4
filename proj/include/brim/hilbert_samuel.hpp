#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brim/ideal.hpp"
#include "brim/sampler.hpp"
#include "brim/staircase.hpp"

namespace brim {

enum class Route { Reduction, Difference, Newton, Lambda, All };

std::string_view route_name(Route r);
Route parse_route(std::string_view name);

struct MultiplicityReport {
  std::size_t value = 0;
  Route method = Route::Reduction;
  int trials = 0;
  /// Local colengths of the sampled reductions; nullopt where a sample had
  /// non-isolated zeros at the origin.
  std::vector<std::optional<std::size_t>> per_trial;
  bool consistent = true;
  /// Value obtained by each route that ran.
  std::vector<std::pair<Route, std::size_t>> routes;
};

template <class K>
struct IdealReduction {
  Ideal<K> b;
  std::size_t colength = 0;
  std::vector<std::optional<std::size_t>> per_trial;
};

inline constexpr int kMaxDifferencePower = 12;

namespace detail {

inline std::string trial_log(const std::vector<std::optional<std::size_t>>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i] ? std::to_string(*v[i]) : "inf";
  }
  return s + "]";
}

/// Throws NOT_M_PRIMARY unless a has finite nonzero local colength.
template <class K>
std::size_t require_m_primary(const Ideal<K>& a) {
  try {
    const auto n = local_colength(a).value;
    if (n == 0) throw Error(ErrorCode::NotMPrimary, "unit ideal");
    return n;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NonFinite) throw Error(ErrorCode::NotMPrimary, "ideal is not locally m-primary");
    throw;
  }
}

template <class K>
std::optional<std::size_t> try_local_colength(const Ideal<K>& a) {
  try {
    return local_colength(a).value;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NonFinite) return std::nullopt;
    throw;
  }
}

/// e of the monomial ideal spanned by every term of a's generators. It
/// contains a, so it bounds e(a) from below.
template <class K>
std::optional<std::size_t> term_ideal_bound(const Ideal<K>& a) {
  std::vector<Exponent> g;
  for (const auto& p : a.generators())
    for (const auto& t : p.terms()) g.emplace_back(t.mono.exp[0], t.mono.exp[1]);
  MonomialIdeal m(std::move(g));
  if (m.is_unit() || !m.is_m_primary()) return std::nullopt;
  return newton_multiplicity(m);
}

/// An upper bound for l(R/b). Over Q this is the colength of the image mod
/// 2^31 - 1, which can only be larger.
template <class K>
std::optional<std::size_t> colength_upper_bound(const Ideal<K>& b) {
  if constexpr (std::is_same_v<K, Rational>) {
    std::vector<Polynomial<Fp>> img;
    for (const auto& p : b.generators()) {
      for (const auto& t : p.terms())
        if (Fp(t.coef.denominator()).is_zero()) return std::nullopt;
      img.push_back(convert<Fp>(p));
    }
    return try_local_colength(Ideal<Fp>(std::move(img)));
  } else {
    return try_local_colength(b);
  }
}

}  // namespace detail

/// a^n generated by the degree-n monomials in the generators of a.
template <class K>
Ideal<K> symmetric_power(const Ideal<K>& a, int n) {
  if (n < 0 || n > kMaxIdealPower) throw Error(ErrorCode::PowerCap, "ideal power must lie in [0, 64]");
  const auto& g = a.generators();
  std::vector<std::pair<Polynomial<K>, std::size_t>> level{{Polynomial<K>::constant(K(1)), 0}};
  for (int d = 0; d < n; ++d) {
    std::vector<std::pair<Polynomial<K>, std::size_t>> next;
    for (const auto& [p, last] : level)
      for (std::size_t j = last; j < g.size(); ++j) next.emplace_back(p * g[j], j);
    level = std::move(next);
  }
  std::vector<Polynomial<K>> out;
  for (auto& [p, last] : level) out.push_back(std::move(p));
  return Ideal<K>(dedupe(std::move(out)));
}

/// e(a) as the stabilized second difference of n -> l(R/a^n). Three equal
/// consecutive differences are required.
template <class K>
std::size_t multiplicity_by_differences(const Ideal<K>& a, int max_power = kMaxDifferencePower) {
  detail::require_m_primary(a);
  std::vector<long> len{0};
  std::vector<long> second;
  for (int n = 1; n <= max_power; ++n) {
    len.push_back(static_cast<long>(n == 1 ? local_colength(a).value : local_colength(symmetric_power(a, n)).value));
    if (n >= 2) second.push_back(len[n] - 2 * len[n - 1] + len[n - 2]);
    const std::size_t k = second.size();
    if (k >= 3 && second[k - 1] == second[k - 2] && second[k - 2] == second[k - 3]) {
      if (second[k - 1] <= 0) break;
      return static_cast<std::size_t>(second[k - 1]);
    }
  }
  throw Error(ErrorCode::NoStabilization, "second differences of l(R/a^n) did not settle");
}

template <class K>
std::size_t multiplicity_by_newton(const Ideal<K>& a) {
  auto m = as_monomial(a);
  if (!m) throw Error(ErrorCode::NonMonomial, "Newton route needs a monomial ideal");
  if (m->is_unit()) return 0;
  if (!m->is_m_primary()) throw Error(ErrorCode::NotMPrimary, "monomial ideal is not m-primary");
  return newton_multiplicity(*m);
}

/// A two-generated ideal b = (f, g) of general combinations of a's
/// generators with l(R/b) = e(a). A trial whose colength meets the term
/// ideal bound is accepted at once (l(R/b) >= e(a) >= bound). Otherwise the
/// minimum over the trials is accepted when two trials attain it or the
/// difference route confirms it.
template <class K>
IdealReduction<K> minimal_reduction_ideal(const Ideal<K>& a, const GeneralElementSampler& sampler,
                                          std::uint64_t salt = 0) {
  const std::size_t len = detail::require_m_primary(a);
  if (a.num_generators() <= 2) return IdealReduction<K>{a, len, {len}};
  std::vector<std::optional<std::size_t>> values;
  std::vector<Ideal<K>> cands;
  const auto lower = detail::term_ideal_bound(a);
  for (int t = 0; t < sampler.trials; ++t) {
    auto rng = sampler.stream(static_cast<std::uint64_t>(t), salt);
    auto f = random_combination(a.generators(), rng, sampler.bound);
    auto g = random_combination(a.generators(), rng, sampler.bound);
    cands.push_back(Ideal<K>({f, g}));
    if (lower && detail::colength_upper_bound(cands.back()) == lower) {
      values.push_back(lower);
      return IdealReduction<K>{cands.back(), *lower, values};
    }
    values.push_back(detail::try_local_colength(cands.back()));
  }
  std::optional<std::size_t> best;
  std::size_t at = 0;
  for (std::size_t t = 0; t < values.size(); ++t)
    if (values[t] && (!best || *values[t] < *best)) {
      best = values[t];
      at = t;
    }
  if (best) {
    const auto hits = std::count(values.begin(), values.end(), best);
    if (hits >= 2) return IdealReduction<K>{cands[at], *best, values};
    try {
      if (multiplicity_by_differences(a) == *best) return IdealReduction<K>{cands[at], *best, values};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoStabilization) throw;
    }
  }
  throw Error(ErrorCode::GenericityFailure, "no certified minimal reduction; trial colengths " + detail::trial_log(values));
}

template <class K>
MultiplicityReport multiplicity(const Ideal<K>& a, Route route, const GeneralElementSampler& sampler = {},
                                int max_power = kMaxDifferencePower) {
  MultiplicityReport rep;
  rep.method = route;
  if (a.is_unit()) {
    rep.routes.emplace_back(route, 0);
    return rep;
  }
  switch (route) {
    case Route::Reduction: {
      auto red = minimal_reduction_ideal(a, sampler);
      rep.value = red.colength;
      rep.trials = static_cast<int>(red.per_trial.size());
      rep.per_trial = red.per_trial;
      break;
    }
    case Route::Difference:
      rep.value = multiplicity_by_differences(a, max_power);
      break;
    case Route::Newton:
      rep.value = multiplicity_by_newton(a);
      break;
    case Route::All: {
      auto r = multiplicity(a, Route::Reduction, sampler, max_power);
      rep = r;
      rep.method = Route::All;
      rep.routes.clear();
      rep.routes.emplace_back(Route::Reduction, r.value);
      rep.routes.emplace_back(Route::Difference, multiplicity_by_differences(a, max_power));
      if (as_monomial(a)) rep.routes.emplace_back(Route::Newton, multiplicity_by_newton(a));
      for (const auto& [k, v] : rep.routes) rep.consistent = rep.consistent && v == rep.value;
      return rep;
    }
    case Route::Lambda:
      throw Error(ErrorCode::InvalidArgument, "the LAMBDA route applies to modules");
  }
  rep.routes.emplace_back(route, rep.value);
  return rep;
}

/// Shorthand for the certified REDUCTION value (0 for the unit ideal).
template <class K>
std::size_t hilbert_samuel(const Ideal<K>& a, const GeneralElementSampler& sampler = {}) {
  if (a.is_unit()) return 0;
  if (auto m = as_monomial(a); m && m->is_m_primary()) return newton_multiplicity(*m);
  return multiplicity(a, Route::Reduction, sampler).value;
}

}  // namespace brim

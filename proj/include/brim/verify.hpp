#pragma once

#include <algorithm>
#include <json.hpp>
#include <random>
#include <string>

#include "brim/bourbaki.hpp"
#include "brim/io.hpp"
#include "brim/jones.hpp"

namespace brim {

enum class FieldKind { Q, Fp };

FieldKind parse_field(std::string_view name);
std::string_view field_name(FieldKind f);

struct SuiteOptions {
  FieldKind field = FieldKind::Q;
  std::uint64_t seed = 0;
  int trials = 3;
  int count = 0;  // 0: suite default
  int max = 0;    // parameter cap (jones); 0: default
};

/// Runs a named suite (rankone, shortformula, ingclosed, thmallrank, jones,
/// counterexample). The report always has "pass" and "fail".
nlohmann::ordered_json run_suite(std::string_view name, const SuiteOptions& opt);

/// Exact integers: numbers up to 2^53, strings beyond.
nlohmann::ordered_json exact(long long v);

// Seeded random inputs. Each case draws from its own stream.

inline std::mt19937_64 case_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// m-primary staircase with 3 to `mu` generators and exponents at most `cap`.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int mu, int cap) {
  const int n = uniform(rng, 3, mu);
  std::vector<int> xs(static_cast<std::size_t>(cap)), ys;
  for (int v = 1; v <= cap; ++v) xs[static_cast<std::size_t>(v - 1)] = v;
  ys = xs;
  std::shuffle(xs.begin(), xs.end(), rng);
  std::shuffle(ys.begin(), ys.end(), rng);
  xs.resize(static_cast<std::size_t>(n - 1));
  ys.resize(static_cast<std::size_t>(n - 1));
  xs.push_back(0);
  ys.push_back(0);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.rbegin(), ys.rend());
  std::vector<Exponent> g;
  for (std::size_t k = 0; k < xs.size(); ++k) g.emplace_back(xs[k], ys[k]);
  return MonomialIdeal(std::move(g));
}

/// Sum of `terms` monomials of degree in [lo, hi] with small nonzero coefficients.
template <class K>
Polynomial<K> random_polynomial(std::mt19937_64& rng, int terms, int lo, int hi) {
  std::vector<std::pair<K, Monomial>> raw;
  for (int k = 0; k < terms; ++k) {
    const int deg = uniform(rng, lo, hi);
    const int a = uniform(rng, 0, deg);
    Monomial m;
    m.exp[0] = static_cast<std::uint16_t>(a);
    m.exp[1] = static_cast<std::uint16_t>(deg - a);
    int c = uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1);
    raw.emplace_back(K(c), m);
  }
  return Polynomial<K>::from_terms(std::move(raw), 2, MonomialOrder::grevlex(2));
}

/// Three generators of degree in [1, max_deg], m-primary.
template <class K>
Ideal<K> random_ideal(std::mt19937_64& rng, int max_deg) {
  for (;;) {
    std::vector<Polynomial<K>> g;
    for (int k = 0; k < 3; ++k) g.push_back(random_polynomial<K>(rng, uniform(rng, 1, 3), 1, max_deg));
    Ideal<K> a(g);
    if (detail::try_local_colength(a).value_or(0) > 0) return a;
  }
}

/// An r x cols presentation with entries in m (no free summand), about a
/// third of them zero, and finite colength.
template <class K>
ModulePresentation<K> random_module(std::mt19937_64& rng, int r, int cols, int max_deg) {
  for (;;) {
    PolyMatrix<K> m(r, cols);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cols; ++j)
        if (uniform(rng, 0, 2)) m(i, j) = random_polynomial<K>(rng, uniform(rng, 1, 2), 1, max_deg);
    bool zero_col = false;
    for (int j = 0; j < cols; ++j) {
      bool z = true;
      for (int i = 0; i < r; ++i) z = z && m(i, j).is_zero();
      zero_col = zero_col || z;
    }
    if (zero_col) continue;
    ModulePresentation<K> p(m);
    if (detail::try_local_colength(p.fitt0()).value_or(0) > 0) return p;
  }
}

template <class K>
std::string matrix_text(const PolyMatrix<K>& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < m.cols(); ++j) s += (j ? ", \"" : "\"") + to_string(m(i, j)) + "\"";
    s += "]";
  }
  return s + "]";
}

template <class K>
std::string ideal_text(const Ideal<K>& a) {
  std::string s;
  for (const auto& g : a.generators()) s += (s.empty() ? "" : ", ") + to_string(g);
  return s;
}

// The 2 x 5 module with F/M = I/J, I = (x^20, y^14), J = (x^36, x^25y^4, x^8y^18, y^24).

template <class K>
ModulePresentation<K> counterexample_module() {
  std::vector<std::vector<Polynomial<K>>> rows{
      {parse<K>("x^16"), parse<K>("0"), parse<K>("0"), parse<K>("x^5*y^4"), parse<K>("-y^14")},
      {parse<K>("0"), parse<K>("y^10"), parse<K>("x^8*y^4"), parse<K>("0"), parse<K>("x^20")}};
  return ModulePresentation<K>(PolyMatrix<K>(rows));
}

struct CounterexampleReport {
  long e_i = 0, e_j = 0, e_f0_ij = 0, e_f0_ij_prime = 0, rhs = 0, br = 0;
  std::string j_prime;
  /// First failing pipeline condition for the bad J' (0 if all held).
  int bad_condition = 0;
};

/// The right-hand side of the rank-two formula with J' = (x^36 + y^24, x^25y^4)
/// against br(M). J' comes from L~ = (G | z | c_0 + c_1 | c_3), G the last
/// column and z a fixed combination of all columns.
template <class K>
CounterexampleReport counterexample(const GeneralElementSampler& sampler) {
  const auto m = counterexample_module<K>();
  const auto& a = m.matrix();
  const auto g = a.select_columns({4});
  const auto bd = bourbaki_from(m, g);
  PolyMatrix<K> l(2, 4);
  const long mix[] = {3, -7, 11, 5, 2};
  for (int i = 0; i < 2; ++i) {
    l(i, 0) = a(i, 4);
    for (int c = 0; c < 5; ++c) l(i, 1) += a(i, c) * Polynomial<K>::constant(K(mix[c]));
    l(i, 2) = a(i, 0) + a(i, 1);
    l(i, 3) = a(i, 3);
  }
  auto rng = sampler.stream(0, 0xce);
  auto bad = all_rank_data(m, bd, l, rng, sampler.bound);
  const auto f = br_all_rank(bad, sampler);
  CounterexampleReport rep;
  rep.e_i = f.e_i;
  rep.e_j = f.e_j;
  rep.e_f0_ij = f.e_fitt_ij;
  rep.e_f0_ij_prime = f.e_fitt_ij_prime;
  rep.rhs = f.value;
  rep.br = static_cast<long>(buchsbaum_rim(m, Route::Reduction, sampler).value);
  rep.j_prime = ideal_text(bad.j_prime);
  rep.bad_condition = certify_pipeline(bad, sampler);
  return rep;
}

}  // namespace brim

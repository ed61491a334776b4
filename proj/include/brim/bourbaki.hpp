#pragma once

#include <string>
#include <vector>

#include "brim/linkage.hpp"

namespace brim {

namespace detail {

template <class K>
void require_no_free_summand(const ModulePresentation<K>& m) {
  if (m.rank() < 2) throw Error(ErrorCode::PreconditionFailed, "Bourbaki ideals need rank >= 2");
  const auto& a = m.matrix();
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      if (!a(i, k).coefficient(Monomial{}).is_zero())
        throw Error(ErrorCode::PreconditionFailed, "M has a free direct summand (an entry is a unit)");
}

template <class K>
PolyMatrix<K> column_matrix(const FreeModuleElement<K>& v) {
  PolyMatrix<K> out(static_cast<int>(v.size()), 1);
  for (std::size_t k = 0; k < v.size(); ++k) out(static_cast<int>(k), 0) = v[k];
  return out;
}

template <class K>
Polynomial<K> bordered_det(const PolyMatrix<K>& g, const FreeModuleElement<K>& v) {
  return determinant(hconcat(g, column_matrix(v)));
}

}  // namespace detail

/// F/M ≅ I/J through v -> det(G | v), where G spans a free submodule of rank
/// r - 1 with I = I_{r-1}(G) locally m-primary and J = (det(G | m_j)).
template <class K>
struct BourbakiData {
  PolyMatrix<K> g;
  Ideal<K> i;
  Ideal<K> j;
  /// Present when G came from a certified submatrix chain: its ideals from
  /// index 1 on are I, a_2, ..., a_{r-1}.
  std::optional<LinkChain<K>> chain;

  Polynomial<K> image(const FreeModuleElement<K>& v) const { return detail::bordered_det(g, v); }
};

/// The determinantal isomorphism for an explicit G (r x (r-1)).
template <class K>
BourbakiData<K> bourbaki_from(const ModulePresentation<K>& m, const PolyMatrix<K>& g) {
  detail::require_no_free_summand(m);
  const int r = m.rank();
  if (g.rows() != r || g.cols() != r - 1) throw Error(ErrorCode::InvalidArgument, "G must be r x (r - 1)");
  BourbakiData<K> d{g, maximal_minors(g), Ideal<K>(), std::nullopt};
  if (!is_m_primary(d.i) && !detail::try_local_colength(d.i))
    throw Error(ErrorCode::GenericityFailure, "I_{r-1}(G) is not m-primary");
  std::vector<Polynomial<K>> jg;
  for (int k = 0; k < m.num_generators(); ++k) jg.push_back(detail::bordered_det(g, m.matrix().column(k)));
  d.j = Ideal<K>(dedupe(std::move(jg)));
  return d;
}

/// G is the last r - 1 columns of a general form P * U~ * Q of a certified
/// minimal reduction, taken back to the coordinates of M, so I is the first
/// link of its submatrix chain.
template <class K>
BourbakiData<K> bourbaki_pair(const ModulePresentation<K>& m, const GeneralElementSampler& sampler) {
  detail::require_no_free_summand(m);
  auto sc = submatrix_chain(m, sampler);
  const int r = m.rank();
  auto d = bourbaki_from(m, adjugate(sc.rows) * sc.general.trailing(r, r - 1));
  d.chain = std::move(sc.chain);
  return d;
}

struct BourbakiFormula {
  std::size_t e_j = 0;
  std::size_t e_i = 0;
  std::vector<std::size_t> e_tail;  // e(a_2), ..., e(a_{r-1})
  long value = 0;
};

/// br(M) = e(J) - e(I) + e(a_2) - ... + (-1)^(r-1) e(a_{r-1}).
template <class K>
BourbakiFormula br_by_bourbaki(const ModulePresentation<K>& m, const GeneralElementSampler& sampler) {
  BourbakiFormula f;
  if (m.rank() == 1) {
    f.value = static_cast<long>(hilbert_samuel(m.fitt0(), sampler));
    f.e_j = static_cast<std::size_t>(f.value);
    return f;
  }
  const auto d = bourbaki_pair(m, sampler);
  f.e_j = hilbert_samuel(d.j, sampler);
  f.e_i = d.chain->multiplicities.at(1);
  f.value = static_cast<long>(f.e_j) - static_cast<long>(f.e_i);
  for (std::size_t i = 2; i < d.chain->multiplicities.size(); ++i) {
    f.e_tail.push_back(d.chain->multiplicities[i]);
    f.value += (i % 2 ? -1 : 1) * static_cast<long>(d.chain->multiplicities[i]);
  }
  return f;
}

/// The matrices and ideals behind the all-rank formula. After general row
/// operations the module is P * M; the ideals I and J do not change.
template <class K>
struct AllRankData {
  ModulePresentation<K> module;
  PolyMatrix<K> l;  // (s_1 | ... | s_{r-1} | z_r | ... | z_{2r})
  PolyMatrix<K> u;  // (z_r | ... | z_{2r})
  PolyMatrix<K> n;  // (s_1 | ... | s_{r-1} | z_{2r-1} | z_{2r})
  Ideal<K> i, j, j_prime;
  /// (s | c_1 | c_2) for constant c_1, c_2; I' = (det(s | c_1), det(s | c_2)).
  PolyMatrix<K> t;
  Ideal<K> i_prime;
  /// Fitt0(I/I') = I_{r-2}(b) for the (r-2) x (r-1) block left after the
  /// constant columns are cleared; b is in general form.
  PolyMatrix<K> b;
  LinkChain<K> j_chain, j_prime_chain, i_chain;
  int attempts = 0;
};

namespace detail {

template <class K>
PolyMatrix<K> random_unitriangular(int n, std::mt19937_64& rng, long bound) {
  PolyMatrix<K> q(n, n);
  for (int a = 0; a < n; ++a) {
    q(a, a) = Polynomial<K>::constant(K(1));
    for (int c = a + 1; c < n; ++c) q(a, c) = Polynomial<K>::constant(K(draw(rng, bound)));
  }
  return q;
}

/// Row-reduces (c_1 | c_2 | s) so that c_1, c_2 become e_1, e_2, and returns
/// rows 3..r of the transformed s. Empty when c_1, c_2 are dependent.
template <class K>
std::optional<PolyMatrix<K>> clear_constant_columns(const PolyMatrix<K>& s, const std::vector<K>& c1,
                                                    const std::vector<K>& c2) {
  const int r = s.rows();
  std::vector<std::vector<K>> c{c1, c2};
  PolyMatrix<K> w = s;
  std::vector<int> rows(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) rows[static_cast<std::size_t>(i)] = i;
  for (int col = 0; col < 2; ++col) {
    int piv = -1;
    for (int i = col; i < r; ++i)
      if (!c[col][static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(piv)]);
    const int pr = rows[static_cast<std::size_t>(col)];
    const K inv = K(1) / c[col][static_cast<std::size_t>(pr)];
    for (int i = 0; i < r; ++i) {
      if (i == col) continue;
      const int ri = rows[static_cast<std::size_t>(i)];
      const K f = c[col][static_cast<std::size_t>(ri)] * inv;
      if (f.is_zero()) continue;
      for (int k = 0; k < 2; ++k) c[k][static_cast<std::size_t>(ri)] -= f * c[k][static_cast<std::size_t>(pr)];
      for (int k = 0; k < w.cols(); ++k) w(ri, k) -= w(pr, k).mul_term(f, Monomial{});
    }
  }
  std::vector<int> rest(rows.begin() + 2, rows.end());
  return w.submatrix(rest, PolyMatrix<K>::range(0, w.cols()));
}

template <class K>
PolyMatrix<K> general_form(const PolyMatrix<K>& m, std::mt19937_64& rng, long bound) {
  for (;;) {
    auto p = random_constant_matrix<K>(m.rows(), m.rows(), rng, bound);
    auto q = random_constant_matrix<K>(m.cols(), m.cols(), rng, bound);
    if (!determinant(p).is_zero() && !determinant(q).is_zero()) return p * m * q;
  }
}

}  // namespace detail

/// Assembles the data from an explicit L~ = (s | z_r .. z_{2r}) for M and
/// its Bourbaki data, with I' drawn from `rng`. Nothing is certified here.
template <class K>
AllRankData<K> all_rank_data(const ModulePresentation<K>& m, const BourbakiData<K>& bd, const PolyMatrix<K>& l,
                             std::mt19937_64& rng, long bound) {
  const int r = m.rank();
  if (l.rows() != r || l.cols() != 2 * r) throw Error(ErrorCode::InvalidArgument, "L~ must be r x 2r");
  AllRankData<K> d;
  d.module = m;
  d.l = l;
  const auto s = l.select_columns(PolyMatrix<K>::range(0, r - 1));
  d.u = l.select_columns(PolyMatrix<K>::range(r - 1, 2 * r));
  d.n = hconcat(s, l.select_columns(PolyMatrix<K>::range(2 * r - 2, 2 * r)));
  d.i = bd.i;
  d.j = bd.j;
  d.j_prime = Ideal<K>({detail::bordered_det(s, l.column(2 * r - 2)), detail::bordered_det(s, l.column(2 * r - 1))});
  for (;;) {
    std::vector<K> c1, c2;
    for (int k = 0; k < r; ++k) c1.push_back(K(draw(rng, bound)));
    for (int k = 0; k < r; ++k) c2.push_back(K(draw(rng, bound)));
    auto rest = detail::clear_constant_columns(s, c1, c2);
    if (!rest) continue;
    FreeModuleElement<K> v1, v2;
    for (int k = 0; k < r; ++k) v1.push_back(Polynomial<K>::constant(c1[static_cast<std::size_t>(k)]));
    for (int k = 0; k < r; ++k) v2.push_back(Polynomial<K>::constant(c2[static_cast<std::size_t>(k)]));
    d.t = hconcat(hconcat(s, detail::column_matrix(v1)), detail::column_matrix(v2));
    d.i_prime = Ideal<K>({detail::bordered_det(s, v1), detail::bordered_det(s, v2)});
    d.b = r >= 3 ? detail::general_form(*rest, rng, bound) : *rest;
    break;
  }
  d.j_chain = detail::chain_of_submatrices(d.u, true);
  d.j_prime_chain = detail::chain_of_submatrices(d.n, true);
  if (r >= 3) d.i_chain = detail::chain_of_submatrices(d.b, true);
  return d;
}

/// The conditions on the pipeline, in order. Returns 0 when all hold, else
/// the first failing one: 1 the s-columns give I, 2 the z-columns span a
/// reduction of M, 3 J' is a minimal reduction of J, 4 and 5 the chains of
/// U~ and N~ are links, 6 I' is a minimal reduction of I with linked chain.
template <class K>
int certify_pipeline(AllRankData<K>& d, const GeneralElementSampler& sampler) {
  const int r = d.module.rank();
  const auto s = d.l.select_columns(PolyMatrix<K>::range(0, r - 1));
  if (!local_equal(maximal_minors(s), d.i)) return 1;
  if (!module_contains(d.module, ModulePresentation<K>(d.u)) ||
      !is_reduction_module(ModulePresentation<K>(d.u), d.module, sampler))
    return 2;
  const auto lj = detail::try_local_colength(d.j_prime);
  if (!lj || !d.j.contains(d.j_prime) || *lj != hilbert_samuel(d.j, sampler)) return 3;
  if (detail::certify_chain(d.j_chain, sampler) >= 0) return 4;
  if (detail::certify_chain(d.j_prime_chain, sampler) >= 0) return 5;
  const auto& jl = d.j_chain.ideals;
  const auto& jpl = d.j_prime_chain.ideals;
  if (!local_equal(jl[r - 1], jpl[r - 1])) return 5;
  if (r % 2 == 1 && !local_equal(jl[r - 2], jpl[r - 2])) return 5;
  if (r >= 3) {
    const auto li = detail::try_local_colength(d.i_prime);
    if (!li || *li != hilbert_samuel(d.i, sampler)) return 6;
    if (!local_equal(maximal_minors(d.b), maximal_minors(d.t))) return 6;
    if (r >= 4 && detail::certify_chain(d.i_chain, sampler) >= 0) return 6;
  }
  return 0;
}

/// Builds certified all-rank data: G from `bd`, the z-columns from a
/// certified minimal reduction, then general row operations and additions
/// of earlier columns to later ones. Up to five attempts.
template <class K>
AllRankData<K> assume_pipeline(const ModulePresentation<K>& m, const BourbakiData<K>& bd,
                               const GeneralElementSampler& sampler) {
  const int r = m.rank();
  std::string log;
  for (int attempt = 0; attempt < kMaxGeneralAttempts; ++attempt) {
    auto rng = sampler.stream(static_cast<std::uint64_t>(attempt), 0xa55);
    const auto u = minimal_reduction_module(m, sampler, 0x100 + static_cast<std::uint64_t>(attempt)).u.matrix();
    auto p = random_constant_matrix<K>(r, r, rng, sampler.bound);
    if (determinant(p).is_zero()) continue;
    auto l = p * hconcat(bd.g, u) * detail::random_unitriangular<K>(2 * r, rng, sampler.bound);
    ModulePresentation<K> pm(p * m.matrix());
    auto d = all_rank_data(pm, bd, l, rng, sampler.bound);
    d.attempts = attempt + 1;
    const int bad = certify_pipeline(d, sampler);
    if (bad == 0) return d;
    log += " attempt " + std::to_string(attempt + 1) + " fails condition " + std::to_string(bad) + ";";
  }
  throw Error(ErrorCode::GenericityFailure, "pipeline not certified:" + log);
}

/// Same, with I, J, G given explicitly; I and J must match G.
template <class K>
AllRankData<K> assume_pipeline(const ModulePresentation<K>& m, const Ideal<K>& i, const Ideal<K>& j,
                               const PolyMatrix<K>& g, const GeneralElementSampler& sampler) {
  auto bd = bourbaki_from(m, g);
  if (!local_equal(bd.i, i) || !local_equal(bd.j, j))
    throw Error(ErrorCode::PreconditionFailed, "I and J are not I_{r-1}(G) and the image of M");
  return assume_pipeline(m, bd, sampler);
}

struct AllRankFormula {
  long e_j = 0, e_i = 0;
  long e_fitt_ij = 0, e_u = 0;        // e(Fitt0(I/J)), E_U
  long e_fitt_ij_prime = 0, e_n = 0;  // e(Fitt0(I/J')), E_N
  long e_fitt_ii_prime = 0, e_ii = 0; // e(Fitt0(I/I')), E_I
  long value = 0;
};

namespace detail {

template <class K>
long alternating(const LinkChain<K>& c, int last, const GeneralElementSampler& sampler) {
  long s = 0;
  for (int i = 1; i <= last; ++i)
    s += (i % 2 ? -1 : 1) * static_cast<long>(hilbert_samuel(c.ideals[static_cast<std::size_t>(i)], sampler));
  return s;
}

}  // namespace detail

/// e(J) - e(I) + (e(Fitt0(I/J)) + E_U) - (e(Fitt0(I/J')) + E_N) + (e(Fitt0(I/I')) + E_I).
/// Evaluated on whatever data is given; certification is separate.
template <class K>
AllRankFormula br_all_rank(const AllRankData<K>& d, const GeneralElementSampler& sampler) {
  const int r = d.module.rank();
  AllRankFormula f;
  f.e_j = static_cast<long>(hilbert_samuel(d.j, sampler));
  f.e_i = static_cast<long>(hilbert_samuel(d.i, sampler));
  f.e_fitt_ij = static_cast<long>(hilbert_samuel(d.module.fitt0(), sampler));
  f.e_fitt_ij_prime = static_cast<long>(hilbert_samuel(maximal_minors(d.n), sampler));
  if (r >= 4) {
    const int top = 2 * ((r - 2) / 2);
    f.e_u = detail::alternating(d.j_chain, top, sampler);
    f.e_n = detail::alternating(d.j_prime_chain, top, sampler);
    f.e_ii = detail::alternating(d.i_chain, r - 3, sampler);
  }
  if (r >= 3) f.e_fitt_ii_prime = static_cast<long>(hilbert_samuel(maximal_minors(d.b), sampler));
  f.value = f.e_j - f.e_i + (f.e_fitt_ij + f.e_u) - (f.e_fitt_ij_prime + f.e_n) + (f.e_fitt_ii_prime + f.e_ii);
  return f;
}

}  // namespace brim

#pragma once

#include <vector>

#include "brim/module.hpp"

namespace brim {

/// a_0 ~ a_1 ~ ... ~ a_n with a_{i+1} = b_i : a_i for two-generated reductions b_i.
template <class K>
struct LinkChain {
  std::vector<Ideal<K>> ideals;
  std::vector<Ideal<K>> links;
  std::vector<std::size_t> multiplicities;  // e(a_i)
  bool terminal = false;                    // a_n is a complete intersection

  std::size_t length() const { return links.size(); }
};

inline constexpr int kMaxChainLength = 64;
inline constexpr int kMaxGeneralAttempts = 5;

/// sum (-1)^i e(a_i), which equals l(R/a_0) for a terminal chain.
template <class K>
long colength_by_links(const LinkChain<K>& chain) {
  long s = 0;
  for (std::size_t i = 0; i < chain.multiplicities.size(); ++i)
    s += (i % 2 ? -1 : 1) * static_cast<long>(chain.multiplicities[i]);
  return s;
}

template <class K>
struct LinkStep {
  Ideal<K> b;
  Ideal<K> next;
  std::size_t e = 0;  // l(R/b) = e(a)
};

/// Links a to b : a through a certified minimal reduction b of a.
template <class K>
LinkStep<K> link_once(const Ideal<K>& a, const GeneralElementSampler& sampler, std::uint64_t salt = 0) {
  if (local_mingens(a) < 3) throw Error(ErrorCode::PreconditionFailed, "a complete intersection ends the chain");
  auto red = minimal_reduction_ideal(a, sampler, salt);
  Ideal<K> next = local_colon(red.b, a);
  if (!local_equal(local_colon(red.b, next), a))
    throw Error(ErrorCode::InvolutionFailure, "b : (b : a) differs from a");
  return LinkStep<K>{red.b, next, red.colength};
}

template <class K>
LinkChain<K> link_chain(const Ideal<K>& a, const GeneralElementSampler& sampler) {
  LinkChain<K> chain;
  chain.ideals.push_back(a);
  while (local_mingens(chain.ideals.back()) > 2) {
    if (static_cast<int>(chain.length()) >= kMaxChainLength) throw Error(ErrorCode::ChainCap, "chain exceeds 64 links");
    auto step = link_once(chain.ideals.back(), sampler, chain.length() + 1);
    chain.links.push_back(step.b);
    chain.multiplicities.push_back(step.e);
    chain.ideals.push_back(step.next);
  }
  chain.multiplicities.push_back(local_colength(chain.ideals.back()).value);
  chain.terminal = true;
  return chain;
}

/// Rows and columns of the i-th submatrix: r - 2ceil((i-1)/2) by r + 1 - 2ceil(i/2).
inline std::pair<int, int> chain_shape(int r, int i) {
  auto ceil_half = [](int v) { return v <= 0 ? 0 : (v + 1) / 2; };
  return {r - 2 * ceil_half(i - 1), r + 1 - 2 * ceil_half(i)};
}

namespace detail {

/// Maximal minors of s with one of its first two columns (wide s) or first
/// two rows (tall s) deleted.
template <class K>
Ideal<K> edge_minors(const PolyMatrix<K>& s) {
  std::vector<Polynomial<K>> g;
  if (s.cols() > s.rows()) {
    for (int drop : {0, 1}) {
      std::vector<int> cs;
      for (int j = 0; j < s.cols(); ++j)
        if (j != drop) cs.push_back(j);
      g.push_back(determinant(s.select_columns(cs)));
    }
  } else {
    for (int drop : {0, 1}) {
      std::vector<int> rs;
      for (int i = 0; i < s.rows(); ++i)
        if (i != drop) rs.push_back(i);
      g.push_back(determinant(s.submatrix(rs, PolyMatrix<K>::range(0, s.cols()))));
    }
  }
  return Ideal<K>(g);
}

/// Certifies the ideals of a sequence of nested submatrices as a linkage
/// chain. Returns the failing step, or -1.
template <class K>
int certify_chain(LinkChain<K>& chain, const GeneralElementSampler& sampler) {
  chain.multiplicities.clear();
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    const auto& a = chain.ideals[i];
    const auto& b = chain.links[i];
    const auto& next = chain.ideals[i + 1];
    const auto lb = detail::try_local_colength(b);
    if (!lb || !detail::try_local_colength(a)) return static_cast<int>(i);
    GeneralElementSampler s = sampler;
    s.seed = sampler.seed + 7919 * (i + 1);
    if (hilbert_samuel(a, s) != *lb) return static_cast<int>(i);
    if (!local_equal(local_colon(b, a), next) || !local_equal(local_colon(b, next), a)) return static_cast<int>(i);
    chain.multiplicities.push_back(*lb);
  }
  const auto& last = chain.ideals.back();
  if (last.num_generators() > 2 || !detail::try_local_colength(last)) return static_cast<int>(chain.links.size());
  chain.multiplicities.push_back(local_colength(last).value);
  chain.terminal = true;
  return -1;
}

template <class K>
LinkChain<K> chain_of_submatrices(const PolyMatrix<K>& u, bool trailing) {
  const int r = u.rows();
  LinkChain<K> chain;
  for (int i = 0; i < r; ++i) {
    auto [nr, nc] = chain_shape(r, i);
    auto s = trailing ? u.trailing(nr, nc) : u.leading(nr, nc);
    chain.ideals.push_back(maximal_minors(s));
    if (i + 1 < r) {
      if (!trailing) {
        // The leading blocks shrink from the end: mirror them onto the front.
        std::vector<int> rs, cs;
        for (int k = nr - 1; k >= 0; --k) rs.push_back(k);
        for (int k = nc - 1; k >= 0; --k) cs.push_back(k);
        s = s.submatrix(rs, cs);
      }
      chain.links.push_back(edge_minors(s));
    }
  }
  return chain;
}

}  // namespace detail

template <class K>
struct SubmatrixChain {
  PolyMatrix<K> general;  // P * U~ * Q after the general row and column operations
  LinkChain<K> chain;
  int attempts = 0;
  PolyMatrix<K> rows;  // P
};

/// The chain of maximal-minor ideals of the trailing submatrices of a general
/// form of a minimal reduction of M, certified step by step.
template <class K>
SubmatrixChain<K> submatrix_chain(const ModulePresentation<K>& m, const GeneralElementSampler& sampler) {
  const int r = m.rank();
  const auto u = minimal_reduction_module(m, sampler).u.matrix();
  if (u.cols() != r + 1) throw Error(ErrorCode::PreconditionFailed, "minimal reduction must have r + 1 columns");
  std::string log;
  for (int attempt = 0; attempt < kMaxGeneralAttempts; ++attempt) {
    auto rng = sampler.stream(static_cast<std::uint64_t>(attempt), 0x5ab);
    auto p = random_constant_matrix<K>(r, r, rng, sampler.bound);
    auto q = random_constant_matrix<K>(r + 1, r + 1, rng, sampler.bound);
    if (determinant(p).is_zero() || determinant(q).is_zero()) continue;
    SubmatrixChain<K> out{p * u * q, {}, attempt + 1, p};
    out.chain = detail::chain_of_submatrices(out.general, true);
    const int bad = detail::certify_chain(out.chain, sampler);
    if (bad < 0) return out;
    log += " attempt " + std::to_string(attempt + 1) + " failed at step " + std::to_string(bad) + ";";
  }
  throw Error(ErrorCode::GenericityFailure, "submatrix chain not certified:" + log);
}

/// Fitt0(C_i) for the successive quotients of Auslander duals, each the
/// ideal of maximal minors of a leading submatrix of the general matrix.
template <class K>
std::vector<Ideal<K>> auslander_chain(const PolyMatrix<K>& general) {
  std::vector<Ideal<K>> out;
  for (int i = 0; i < general.rows(); ++i) {
    auto [nr, nc] = chain_shape(general.rows(), i);
    out.push_back(maximal_minors(general.leading(nr, nc).transpose()));
  }
  return out;
}

/// The leading-submatrix chain as a linkage chain, certified.
template <class K>
LinkChain<K> certified_auslander_chain(const PolyMatrix<K>& general, const GeneralElementSampler& sampler) {
  auto chain = detail::chain_of_submatrices(general, false);
  if (const int bad = detail::certify_chain(chain, sampler); bad >= 0)
    throw Error(ErrorCode::GenericityFailure, "Auslander chain fails at step " + std::to_string(bad));
  return chain;
}

/// Rows and columns reversed: leading blocks of the result are the
/// mirrored trailing blocks of m.
template <class K>
PolyMatrix<K> reversed(const PolyMatrix<K>& m) {
  std::vector<int> rs, cs;
  for (int i = m.rows() - 1; i >= 0; --i) rs.push_back(i);
  for (int j = m.cols() - 1; j >= 0; --j) cs.push_back(j);
  return m.submatrix(rs, cs);
}

struct LinksFormula {
  std::size_t e_fitt0 = 0;
  std::vector<std::size_t> e_chain;  // e(a_1), ..., e(a_{r-1})
  long value = 0;
};

/// br(M) = e(Fitt0(F/M)) + sum_{i=1}^{r-1} (-1)^i e(a_i).
template <class K>
LinksFormula br_by_links(const ModulePresentation<K>& m, const GeneralElementSampler& sampler) {
  LinksFormula f;
  f.e_fitt0 = hilbert_samuel(m.fitt0(), sampler);
  f.value = static_cast<long>(f.e_fitt0);
  if (m.rank() == 1) return f;
  auto sc = submatrix_chain(m, sampler);
  for (std::size_t i = 1; i < sc.chain.multiplicities.size(); ++i) {
    f.e_chain.push_back(sc.chain.multiplicities[i]);
    f.value += (i % 2 ? -1 : 1) * static_cast<long>(sc.chain.multiplicities[i]);
  }
  return f;
}

}  // namespace brim

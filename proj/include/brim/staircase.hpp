#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "brim/ideal.hpp"

namespace brim {

using Exponent = std::pair<int, int>;

/// Monomial ideal of k[x,y] in staircase form: minimal generators x^a y^b
/// with a strictly increasing and b strictly decreasing.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes and sorts arbitrary exponent pairs.
  explicit MonomialIdeal(std::vector<Exponent> gens);
  MonomialIdeal(std::initializer_list<Exponent> gens) : MonomialIdeal(std::vector<Exponent>(gens)) {}

  const std::vector<Exponent>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_m_primary() const;
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == Exponent{0, 0}; }
  bool contains(Exponent p) const;

  template <class K>
  Ideal<K> to_ideal() const {
    std::vector<Polynomial<K>> g;
    for (auto [a, b] : gens_) {
      Monomial m;
      m.exp[0] = static_cast<std::uint16_t>(a);
      m.exp[1] = static_cast<std::uint16_t>(b);
      g.push_back(Polynomial<K>::term(K(1), m, 2, MonomialOrder::grevlex(2)));
    }
    return Ideal<K>(std::move(g));
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<Exponent> gens_;
};

/// The monomial ideal generated by a's reduced basis, when that basis is monomial.
template <class K>
std::optional<MonomialIdeal> as_monomial(const Ideal<K>& a) {
  if (a.is_zero()) return std::nullopt;
  std::vector<Exponent> g;
  for (const auto& p : a.groebner_basis().elements()) {
    if (!p.is_monomial()) return std::nullopt;
    g.emplace_back(p.leading_monomial().exp[0], p.leading_monomial().exp[1]);
  }
  return MonomialIdeal(std::move(g));
}

/// Lattice points under the staircase.
std::size_t monomial_colength(const MonomialIdeal& a);

struct NewtonPolygon {
  std::vector<Exponent> vertices;  // from the y-axis down to the x-axis
  Rational covolume;
};

NewtonPolygon newton_polygon(const MonomialIdeal& a);
/// 2 * covolume.
std::size_t newton_multiplicity(const MonomialIdeal& a);

/// Lattice points on or above the Newton polygon.
MonomialIdeal integral_closure(const MonomialIdeal& a);

/// (n+1) x n matrix of the adjacent syzygies x^(a_{k+1}-a_k) g_k - y^(b_k-b_{k+1}) g_{k+1}.
template <class K>
std::vector<std::vector<Polynomial<K>>> hilbert_burch(const MonomialIdeal& a) {
  const auto& g = a.generators();
  const std::size_t n = g.empty() ? 0 : g.size() - 1;
  const auto order = MonomialOrder::grevlex(2);
  std::vector<std::vector<Polynomial<K>>> m(n + 1, std::vector<Polynomial<K>>(n, Polynomial<K>(2)));
  for (std::size_t k = 0; k < n; ++k) {
    m[k][k] = Polynomial<K>::term(K(1), var_power(0, g[k + 1].first - g[k].first), 2, order);
    m[k + 1][k] = Polynomial<K>::term(K(-1), var_power(1, g[k].second - g[k + 1].second), 2, order);
  }
  return m;
}

}  // namespace brim

#pragma once

#include <string>
#include <string_view>

#include "brim/module.hpp"
#include "brim/staircase.hpp"

namespace brim {

/// Fitt_i(a) of a monomial ideal, i.e. the ideal of (n + 1 - i)-minors of its
/// (n + 1) x n Hilbert-Burch matrix. Every nonzero minor of that bidiagonal
/// matrix is a single product of entries, so the ideal is monomial.
MonomialIdeal fitting_ideal(const MonomialIdeal& a, int i);

/// sum_{i >= 1} (-1)^(i+1) e(Fitt_i(a)), with e((1)) = 0. Needs a integrally closed.
long ingclosed_sum(const MonomialIdeal& a);

/// I = (x^s, y^t) and J = (x^(s+i), x^d y^(t+e), y^(t+j)) with J ⊆ mI; the
/// module is the image of [[-y^t, x^i, 0, 0], [x^s, 0, x^d y^e, y^j]].
struct JonesInstance {
  int s = 1, t = 1, i = 1, j = 1, d = 0, e = 1;

  /// Throws InvalidArgument unless s, t, i, j >= 1, d, e >= 0 and J ⊆ mI.
  void validate() const;
  MonomialIdeal ideal_i() const { return MonomialIdeal{{s, 0}, {0, t}}; }
  MonomialIdeal ideal_j() const { return MonomialIdeal{{s + i, 0}, {d, t + e}, {0, t + j}}; }
  Exponent T() const { return {s, t}; }
  Exponent B() const { return {d, t + e}; }
  // Anchors: P and Q end J's staircase on the axes; AQ is parallel to PT.
  Exponent P() const { return {s + i, 0}; }
  Exponent Q() const { return {0, t + j}; }
  Exponent A() const { return {i, j}; }
};

enum class JonesCase { A1, A2, A3, A4, B1, B2, B3, Degenerate };

std::string_view jones_case_name(JonesCase c);

/// A-cases when T lies above PQ, sorted by the side of B on the rays QT, QP,
/// QA; B-cases when T lies below PQ, by B against the rays PQ and PT.
/// Degenerate when T or B is on a deciding line.
JonesCase jones_classify(const JonesInstance& inst);

/// Twice the areas of the triangles TBQ and PBQ.
long twice_dark_area(const JonesInstance& inst);
long twice_light_area(const JonesInstance& inst);

struct StaircaseAnnotation {
  JonesInstance inst;
  bool shade = true;
};

/// SVG 1.1 picture of the staircase, its generators and Newton polygon,
/// optionally with the points T, B, P, Q, A and the two triangles.
std::string staircase_svg(const MonomialIdeal& a, const std::optional<StaircaseAnnotation>& note = std::nullopt);

template <class K>
Polynomial<K> monomial_poly(int a, int b, long c = 1) {
  Monomial m;
  m.exp[0] = static_cast<std::uint16_t>(a);
  m.exp[1] = static_cast<std::uint16_t>(b);
  return Polynomial<K>::term(K(c), m, 2, MonomialOrder::grevlex(2));
}

template <class K>
ModulePresentation<K> jones_module(const JonesInstance& in) {
  PolyMatrix<K> m(2, 4);
  m(0, 0) = monomial_poly<K>(0, in.t, -1);
  m(0, 1) = monomial_poly<K>(in.i, 0);
  m(1, 0) = monomial_poly<K>(in.s, 0);
  m(1, 2) = monomial_poly<K>(in.d, in.e);
  m(1, 3) = monomial_poly<K>(0, in.j);
  return ModulePresentation<K>(m);
}

/// [[-y^t, x^i, 0], [x^s, 0, y^j]] and [[-y^t, x^i, 0], [x^s, y^j, x^d y^e]].
template <class K>
ModulePresentation<K> jones_candidate(const JonesInstance& in, int which) {
  PolyMatrix<K> u(2, 3);
  u(0, 0) = monomial_poly<K>(0, in.t, -1);
  u(0, 1) = monomial_poly<K>(in.i, 0);
  u(1, 0) = monomial_poly<K>(in.s, 0);
  if (which == 1) {
    u(1, 2) = monomial_poly<K>(0, in.j);
  } else {
    u(1, 1) = monomial_poly<K>(0, in.j);
    u(1, 2) = monomial_poly<K>(in.d, in.e);
  }
  return ModulePresentation<K>(u);
}

struct JonesReport {
  JonesCase label = JonesCase::Degenerate;
  long e_j = 0, e_i = 0;
  long br = 0;
  /// "U1" or "U2" when that matrix is a certified reduction; otherwise
  /// "graph1", "graph2" or "none" for the area formula matching the oracle.
  std::string via;
  long dark2 = 0, light2 = 0;  // twice the areas
  long delta = 0;              // e(J) - e(I) - br
  bool area_mismatch = false;
  /// The label agrees with how br was obtained (a1, b1: U1; a4, b2, b3: U2;
  /// a2: graph1; a3: graph2).
  bool consistent = false;
};

/// br(M) for the staircase family, following the reduction candidates and
/// the area formulas, each checked against an independent value of br.
template <class K>
JonesReport jones_br(const JonesInstance& in, const GeneralElementSampler& sampler = {}) {
  in.validate();
  JonesReport rep;
  rep.label = jones_classify(in);
  rep.e_j = static_cast<long>(newton_multiplicity(in.ideal_j()));
  rep.e_i = static_cast<long>(in.s) * in.t;
  rep.dark2 = twice_dark_area(in);
  rep.light2 = twice_light_area(in);
  const auto m = jones_module<K>(in);
  const long base = rep.e_j - rep.e_i;
  for (int which : {1, 2}) {
    const auto u = jones_candidate<K>(in, which);
    if (!is_reduction_module(u, m, sampler)) continue;
    // A reduction with r + 1 generators: br(M) = l(R/Fitt0(F/U)).
    rep.br = static_cast<long>(local_colength(u.fitt0()).value);
    rep.via = which == 1 ? "U1" : "U2";
    break;
  }
  if (rep.via.empty()) {
    rep.br = static_cast<long>(buchsbaum_rim(m, Route::Reduction, sampler).value);
    if (rep.br == base - rep.dark2) {
      rep.via = "graph1";
    } else if (rep.br == base - rep.dark2 + rep.light2) {
      rep.via = "graph2";
    } else {
      rep.via = "none";
      rep.area_mismatch = true;
    }
  }
  rep.delta = base - rep.br;
  switch (rep.label) {
    case JonesCase::A1:
    case JonesCase::B1:
      rep.consistent = rep.via == "U1" && rep.delta == 0;
      break;
    case JonesCase::A4:
    case JonesCase::B2:
    case JonesCase::B3:
      rep.consistent = rep.via == "U2" && rep.delta == 0;
      break;
    case JonesCase::A2:
      rep.consistent = rep.via == "graph1" || rep.br == base - rep.dark2;
      break;
    case JonesCase::A3:
      rep.consistent = rep.via == "graph2" || rep.br == base - rep.dark2 + rep.light2;
      break;
    case JonesCase::Degenerate:
      rep.consistent = !rep.area_mismatch;
      break;
  }
  return rep;
}

}  // namespace brim

#include <doctest.h>

#include <random>

#include "brim/hilbert_samuel.hpp"
#include "brim/io.hpp"

using namespace brim;

TEST_CASE("staircase form") {
  MonomialIdeal a{{2, 0}, {0, 2}, {1, 1}, {3, 3}, {1, 4}};
  CHECK(a.generators() == std::vector<Exponent>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(a.is_m_primary());
  CHECK_FALSE(MonomialIdeal{{1, 0}}.is_m_primary());
  CHECK(a.contains({1, 3}));
  CHECK_FALSE(a.contains({0, 1}));
}

TEST_CASE("monomial colength") {
  CHECK(monomial_colength(MonomialIdeal{{1, 0}, {0, 1}}) == 1);
  CHECK(monomial_colength(MonomialIdeal{{2, 0}, {1, 1}, {0, 2}}) == 3);
  CHECK(monomial_colength(MonomialIdeal{{20, 0}, {0, 14}}) == 280);
  CHECK_THROWS_AS(monomial_colength(MonomialIdeal{{1, 0}}), Error);
}

TEST_CASE("newton multiplicity") {
  CHECK(newton_multiplicity(MonomialIdeal{{5, 0}, {0, 7}}) == 35);
  CHECK(newton_multiplicity(MonomialIdeal{{2, 0}, {1, 1}, {0, 2}}) == 4);
  CHECK(newton_multiplicity(MonomialIdeal{{36, 0}, {25, 4}, {8, 18}, {0, 24}}) == 744);
  auto np = newton_polygon(MonomialIdeal{{2, 0}, {1, 1}, {0, 2}});
  CHECK(np.vertices == std::vector<Exponent>{{0, 2}, {2, 0}});
  CHECK(np.covolume == Rational(2));
}

TEST_CASE("integral closure") {
  CHECK(integral_closure(MonomialIdeal{{2, 0}, {0, 2}}) == MonomialIdeal{{2, 0}, {1, 1}, {0, 2}});
  CHECK(integral_closure(MonomialIdeal{{1, 0}, {0, 1}}) == MonomialIdeal{{1, 0}, {0, 1}});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Exponent> g{{0, 1 + static_cast<int>(rng() % 12)}, {1 + static_cast<int>(rng() % 12), 0}};
    for (int k = 0; k < 3; ++k) g.emplace_back(rng() % 12, rng() % 12);
    MonomialIdeal a(g);
    auto c = integral_closure(a);
    CHECK(integral_closure(c) == c);
    for (auto p : a.generators()) CHECK(c.contains(p));
    CHECK(monomial_colength(c) <= monomial_colength(a));
    CHECK(newton_multiplicity(c) == newton_multiplicity(a));
    CHECK(monomial_colength(a) <= newton_multiplicity(a));
  }
}

TEST_CASE("hilbert-burch") {
  MonomialIdeal m2{{2, 0}, {1, 1}, {0, 2}};
  auto hb = hilbert_burch<Rational>(m2);
  REQUIRE(hb.size() == 3);
  CHECK(to_string(hb[0][0]) == "x");
  CHECK(to_string(hb[1][0]) == "-y");
  CHECK(to_string(hb[1][1]) == "x");
  CHECK(to_string(hb[2][1]) == "-y");
  CHECK(hb[0][1].is_zero());
  auto ci = hilbert_burch<Rational>(MonomialIdeal{{3, 0}, {0, 5}});
  REQUIRE(ci.size() == 2);
  CHECK(to_string(ci[0][0]) == "x^3");
  CHECK(to_string(ci[1][0]) == "-y^5");
}

#include <doctest.h>

#include <random>

#include "brim/jones.hpp"

using namespace brim;

namespace {

MonomialIdeal random_monomial(std::mt19937_64& rng, int mu, int cap) {
  std::uniform_int_distribution<int> d(0, cap), p(1, cap);
  std::vector<Exponent> g{{p(rng), 0}, {0, p(rng)}};
  for (int k = 2; k < mu; ++k) g.emplace_back(d(rng), p(rng));
  return MonomialIdeal(g);
}

}  // namespace

TEST_CASE("fitting ideals of monomial ideals") {
  MonomialIdeal m2{{2, 0}, {1, 1}, {0, 2}};
  CHECK(fitting_ideal(m2, 1) == m2);
  CHECK(fitting_ideal(m2, 2) == (MonomialIdeal{{1, 0}, {0, 1}}));
  CHECK(fitting_ideal(m2, 3).is_unit());
  CHECK(fitting_ideal(m2, 0).size() == 0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_monomial(rng, 2 + trial % 4, 7);
    PolyMatrix<Fp> hb(hilbert_burch<Fp>(a));
    for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
      auto direct = as_monomial(fitting_ideal(hb, i));
      REQUIRE(direct);
      CHECK(fitting_ideal(a, i) == *direct);
    }
  }
}

TEST_CASE("alternating Fitting sum of integrally closed ideals") {
  CHECK(ingclosed_sum(MonomialIdeal{{2, 0}, {1, 1}, {0, 2}}) == 3);
  CHECK(ingclosed_sum(MonomialIdeal{{1, 0}, {0, 3}}) == 3);
  CHECK_THROWS_AS(ingclosed_sum(MonomialIdeal{{2, 0}, {0, 2}}), Error);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = integral_closure(random_monomial(rng, 2 + trial % 4, 12));
    CHECK(ingclosed_sum(a) == static_cast<long>(monomial_colength(a)));
  }
}

TEST_CASE("classifier") {
  // T above PQ, but B sits on PQ itself.
  CHECK(jones_classify(JonesInstance{2, 2, 1, 1, 1, 0}) == JonesCase::Degenerate);
  CHECK(jones_classify(JonesInstance{1, 2, 1, 1, 0, 2}) == JonesCase::A1);
  CHECK(jones_classify(JonesInstance{2, 3, 1, 1, 1, 0}) == JonesCase::A2);
  CHECK(jones_classify(JonesInstance{2, 3, 1, 2, 1, 0}) == JonesCase::A3);
  CHECK(jones_classify(JonesInstance{1, 3, 1, 2, 0, 1}) == JonesCase::A4);
  CHECK(jones_classify(JonesInstance{1, 1, 1, 2, 0, 3}) == JonesCase::B1);
  CHECK(jones_classify(JonesInstance{1, 1, 1, 3, 0, 2}) == JonesCase::B2);
  CHECK(jones_classify(JonesInstance{1, 2, 1, 3, 0, 1}) == JonesCase::B3);
  CHECK(jones_classify(JonesInstance{1, 1, 1, 1, 1, 0}) == JonesCase::Degenerate);
  CHECK_THROWS_AS(jones_classify(JonesInstance{1, 1, 1, 1, 0, 0}), Error);
  CHECK_THROWS_AS(jones_classify(JonesInstance{0, 1, 1, 1, 1, 0}), Error);
  JonesInstance in{2, 3, 1, 2, 1, 0};
  CHECK(twice_dark_area(in) == 2);
  CHECK(twice_light_area(in) == 1);
  auto rep = jones_br<Fp>(in);
  CHECK(rep.via == "graph2");
  CHECK(rep.br == 14 - 6 - 2 + 1);
}

TEST_CASE("staircase family agrees with the reduction oracle") {
  int labelled = 0;
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t)
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          for (int d = 0; d <= 2; ++d)
            for (int e = 0; e <= 2; ++e) {
              if (d + e == 0) continue;
              JonesInstance in{s, t, i, j, d, e};
              auto rep = jones_br<Fp>(in);
              CHECK_MESSAGE(rep.consistent, s, t, i, j, d, e);
              CHECK_FALSE(rep.area_mismatch);
              if (rep.label != JonesCase::Degenerate) ++labelled;
            }
  CHECK(labelled > 0);
  auto rep = jones_br<Rational>(JonesInstance{4, 3, 2, 3, 1, 1});
  CHECK(rep.consistent);
}

TEST_CASE("staircase pictures") {
  MonomialIdeal m2{{2, 0}, {1, 1}, {0, 2}};
  auto svg = staircase_svg(m2);
  CHECK(svg == staircase_svg(m2));
  CHECK(svg.find("viewBox=\"0 0 80 80\"") != std::string::npos);
  std::size_t dots = 0;
  for (auto p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++dots;
  CHECK(dots == 3);
  JonesInstance in{3, 2, 2, 1, 1, 1};
  auto pic = staircase_svg(in.ideal_j(), StaircaseAnnotation{in});
  CHECK(pic.find("class=\"dark\"") != std::string::npos);
  CHECK(pic.find(">A</text>") != std::string::npos);
  CHECK_THROWS_AS(staircase_svg(MonomialIdeal{{1, 0}}), Error);
}

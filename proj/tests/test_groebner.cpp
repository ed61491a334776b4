#include <doctest.h>

#include <algorithm>
#include <random>

#include "brim/ideal.hpp"
#include "brim/io.hpp"

using namespace brim;

namespace {

template <class K = Rational>
Polynomial<K> P(const char* s) {
  return parse<K>(s);
}

template <class K = Rational>
std::vector<Polynomial<K>> L(const char* s) {
  std::vector<Polynomial<K>> g;
  for (auto& p : parse_poly_list(s)) g.push_back(convert<K>(p));
  return g;
}

template <class K>
Polynomial<K> random_poly(std::mt19937_64& rng, int terms, int max_deg, int min_deg = 0) {
  std::uniform_int_distribution<int> c(-9, 9), d(0, max_deg);
  std::vector<std::pair<K, Monomial>> raw;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int a = d(rng), b = d(rng);
    if (a + b < min_deg) a += min_deg - a - b;
    m.exp[0] = static_cast<std::uint16_t>(a);
    m.exp[1] = static_cast<std::uint16_t>(b);
    raw.emplace_back(K(c(rng)), m);
  }
  return Polynomial<K>::from_terms(std::move(raw), 2, MonomialOrder::grevlex(2));
}

}  // namespace

TEST_CASE("parse and print round trip") {
  for (const char* s : {"x^2*y - 3*x + 1/2", "-y^14 + x^20", "0", "7", "x*y^3 - 2/3*y"}) {
    auto p = P(s);
    CHECK(parse<Rational>(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse<Rational>("x^"), Error);
  CHECK_THROWS_AS(parse<Rational>("z"), Error);
}

TEST_CASE("ring arithmetic") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto a = random_poly<Rational>(rng, 4, 5), b = random_poly<Rational>(rng, 4, 5), c = random_poly<Rational>(rng, 3, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Polynomial<Rational>(2));
  }
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(pow(P("x + 1"), 3) == P("x^3 + 3*x^2 + 3*x + 1"));
}

TEST_CASE("prime fields") {
  Fp a(123456789);
  CHECK((a * a.inverse()).is_one());
  CHECK(Fp(-1) + Fp(1) == Fp(0));
  CHECK(Fp(Rational(Integer(1), Integer(2))) * Fp(2) == Fp(1));
  ModP::set_prime(101);
  CHECK((ModP(37) * ModP(37).inverse()).is_one());
  CHECK(ModP(Integer(-1)) == ModP(100));
  ModP::set_prime(2147483647u);
}

TEST_CASE("term orders") {
  Monomial x3, xy2, y3;
  x3.exp[0] = 3;
  xy2.exp[0] = 1;
  xy2.exp[1] = 2;
  y3.exp[1] = 3;
  auto gr = MonomialOrder::grevlex(2);
  auto lx = MonomialOrder::lex(2);
  CHECK(gr.compare(x3, xy2) > 0);
  CHECK(gr.compare(xy2, y3) > 0);
  CHECK(lx.compare(xy2, y3) > 0);
  Monomial x;
  x.exp[0] = 1;
  CHECK(lx.compare(x, y3) > 0);
  CHECK(gr.compare(x, y3) < 0);
  Monomial t;
  t.exp[2] = 1;
  auto el = MonomialOrder::elimination(3, 1);
  Monomial big;
  big.exp[0] = 9;
  big.exp[1] = 9;
  CHECK(el.compare(t, big) > 0);
}

TEST_CASE("known bases") {
  auto gb = groebner(L("x*y - 1, x^2 - y"), MonomialOrder::lex(2));
  REQUIRE(gb.size() == 2);
  CHECK(gb.elements()[0] == P("y^3 - 1").reordered(MonomialOrder::lex(2)));
  CHECK(gb.elements()[1] == P("x - y^2").reordered(MonomialOrder::lex(2)));
  CHECK(groebner(L("x^2 + y, x*y"), MonomialOrder::grevlex(2)).size() == 3);
  CHECK(groebner(L("x + 1, x"), MonomialOrder::grevlex(2)).is_unit());
}

TEST_CASE("basis is unique under shuffling and contains its generators") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 15; ++i) {
    std::vector<Polynomial<Rational>> g;
    for (int k = 0; k < 3; ++k) g.push_back(random_poly<Rational>(rng, 3, 4));
    auto gb = groebner(g, MonomialOrder::grevlex(2));
    CHECK(satisfies_buchberger_criterion(gb));
    for (const auto& f : g) CHECK(is_member(f, gb));
    auto h = g;
    std::shuffle(h.begin(), h.end(), rng);
    h.push_back(g[0] * P("x - 2*y") + g[1]);
    CHECK(groebner(h, MonomialOrder::grevlex(2)) == gb);
  }
}

TEST_CASE("module bases") {
  auto order = MonomialOrder::grevlex(2);
  std::vector<FreeModuleElement<Rational>> cols{{P("x"), P("y")}, {P("y"), P("0")}, {P("0"), P("x^2")}};
  auto gb = groebner(cols, order);
  CHECK(satisfies_buchberger_criterion(gb));
  CHECK(normal_form(FreeModuleElement<Rational>{P("x*y"), P("y^2")}, gb)[0].is_zero());
  CHECK(is_member(pack(FreeModuleElement<Rational>{P("x^2 + y^2"), P("x*y")}, order), gb));
}

TEST_CASE("multi-modular truncated bases agree with Buchberger over Z") {
  std::mt19937_64 rng(7);
  auto order = MonomialOrder::grevlex(2);
  for (int i = 0; i < 8; ++i) {
    const int n = 8 + i;
    std::vector<Polynomial<Integer>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(clear_denominators(random_poly<Rational>(rng, 4, 6, 2)));
    auto lifted = detail::modular_truncated_basis(gens, order, 1, n);
    REQUIRE(lifted);
    auto direct = detail::buchberger<Integer>(gens, order, 1, n);
    REQUIRE(lifted->size() == direct.size());
    for (std::size_t k = 0; k < direct.size(); ++k)
      CHECK(detail::from_work<Rational>((*lifted)[k]) == detail::from_work<Rational>(direct[k]));
  }
  // Rank two.
  for (int i = 0; i < 4; ++i) {
    std::vector<Polynomial<Integer>> gens;
    for (int k = 0; k < 3; ++k) {
      FreeModuleElement<Rational> v{random_poly<Rational>(rng, 3, 4, 1), random_poly<Rational>(rng, 3, 4, 1)};
      gens.push_back(clear_denominators(pack(v, order)));
    }
    auto lifted = detail::modular_truncated_basis(gens, order, 2, 9);
    REQUIRE(lifted);
    auto direct = detail::buchberger<Integer>(gens, order, 2, 9);
    REQUIRE(lifted->size() == direct.size());
    for (std::size_t k = 0; k < direct.size(); ++k)
      CHECK(detail::from_work<Rational>((*lifted)[k]) == detail::from_work<Rational>(direct[k]));
  }
}

TEST_CASE("local colon agrees with the elimination colon of the local component") {
  std::mt19937_64 rng(99);
  const char* pairs[][2] = {
      {"x^3 + y^4, x*y^2", "x^3, x*y^2, y^4"},
      {"x^5 - y^3, x^2*y", "x^2, y^3"},
      {"x^2 - x, y^2", "x, y^2"},
      {"x^4 + 3*x^2*y + y^3, x*y^3 - y^4", "x^4, x^2*y, y^3"},
  };
  for (auto& [bs, as] : pairs) {
    Ideal<Rational> b(L(bs)), a(L(as));
    auto lc = local_colon(b, a);
    auto ec = colon(local_component(b), a);
    CHECK(local_equal(lc, ec));
    Ideal<Fp> bf(L<Fp>(bs)), af(L<Fp>(as));
    CHECK(local_equal(local_colon(bf, af), colon(local_component(bf), af)));
  }
}

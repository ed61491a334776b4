#include <doctest.h>

#include "brim/ideal.hpp"
#include "brim/io.hpp"

using namespace brim;

namespace {
template <class K = Rational>
Ideal<K> I(const char* gens) {
  std::vector<Polynomial<K>> g;
  for (auto& p : parse_poly_list(gens)) g.push_back(convert<K>(p));
  return Ideal<K>(g);
}
}  // namespace

TEST_CASE("sum product power") {
  CHECK(ideal_sum(I("x"), I("y")) == I("x, y"));
  CHECK(ideal_power(I("x, y"), 2) == I("x^2, x*y, y^2"));
  CHECK(ideal_product(I("x^2, y^2"), Ideal<Rational>::unit()) == I("x^2, y^2"));
  CHECK(ideal_power(I("x^2, y"), 0).is_unit());
  CHECK_THROWS_AS(ideal_power(I("x"), 65), Error);
}

TEST_CASE("intersect") {
  CHECK(intersect(I("x"), I("y")) == I("x*y"));
  CHECK(intersect(I("x^2, x*y"), I("y")) == I("x*y"));
  CHECK(intersect(I("x^3 + y, x*y^2"), Ideal<Rational>::unit()) == I("x^3 + y, x*y^2"));
}

TEST_CASE("colon") {
  CHECK(colon(I("x^2, y^2"), I("x^2, x*y, y^2")) == I("x, y"));
  CHECK(colon(I("x, y"), I("x, y")).is_unit());
  CHECK(colon(I("x^3, y^3"), I("x, y")) == I("x^3, y^3, x^2*y^2"));
  CHECK_THROWS_AS(colon(I("x"), Ideal<Rational>()), Error);
  auto a = I("x^3 - y^2, x*y^3");
  CHECK(colon(a, Ideal<Rational>::unit()) == a);
  CHECK(colon(a, I("x, y")).contains(a));
}

TEST_CASE("m-primary") {
  CHECK(is_m_primary(I("x^2, y^3")));
  CHECK_FALSE(is_m_primary(I("x")));
  CHECK(is_m_primary(I("x^2 - y^3, y^5")));
  CHECK_FALSE(is_m_primary(Ideal<Rational>::unit()));
}

TEST_CASE("local colength") {
  CHECK(local_colength(I("x^2 - x, y")).value == 1);
  CHECK(local_colength(I("x^2, y^2")).value == 4);
  CHECK(local_colength(I("x^2, y + x*y")).value == 2);
  CHECK(local_colength(Ideal<Rational>::unit()).value == 0);
  CHECK(local_colength(I<Fp>("x^20, y^14")).value == 280);
  CHECK_THROWS_AS(local_colength(I("x^2, x*y")), Error);
}

TEST_CASE("local colength is monotone and matches staircase counts") {
  auto a = I("x^3, x*y^2, y^4");
  auto b = I("x^4, x^2*y^2, y^5");
  CHECK(a.contains(b));
  CHECK(local_colength(a).value <= local_colength(b).value);
  CHECK(local_colength(a).value == standard_monomials(a.groebner_basis()).count());
}

TEST_CASE("local mingens") {
  CHECK(local_mingens(I("x, y")) == 2);
  CHECK(local_mingens(I("x^2, x*y, y^2")) == 3);
  CHECK(local_mingens(I("x^2, y^3")) == 2);
  CHECK(local_mingens(I("x^2, y^3, x^2 + y^3")) == 2);
}

TEST_CASE("local component drops points away from the origin") {
  auto a = I("x^2 - x, y^2");
  CHECK(local_component(a) == I("x, y^2"));
  CHECK(local_equal(a, I("x, y^2")));
  CHECK(locally_contains(a, I("x")));
}

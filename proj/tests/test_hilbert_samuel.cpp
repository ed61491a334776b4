#include <doctest.h>

#include <random>

#include "brim/hilbert_samuel.hpp"
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

TEST_CASE("complete intersections, every route") {
  for (Route r : {Route::Reduction, Route::Difference, Route::Newton}) CHECK(multiplicity(I("x^3, y^5"), r).value == 15);
  CHECK(multiplicity(I<Fp>("x^20, y^14"), Route::Newton).value == 280);
  CHECK(multiplicity(I<Fp>("x^20, y^14"), Route::Reduction).value == 280);
}

TEST_CASE("square of the maximal ideal") {
  auto m2 = I("x^2, x*y, y^2");
  auto rep = multiplicity(m2, Route::All);
  CHECK(rep.value == 4);
  CHECK(rep.consistent);
  CHECK(rep.routes.size() == 3);
  for (int n = 1; n <= 4; ++n) CHECK(local_colength(symmetric_power(m2, n)).value == std::size_t(2 * n * n + n));
}

TEST_CASE("minimal reductions") {
  GeneralElementSampler s{11};
  CHECK(minimal_reduction_ideal(I("x^2, x*y, y^2"), s).colength == 4);
  CHECK(minimal_reduction_ideal(I("x, y"), s).colength == 1);
  CHECK(minimal_reduction_ideal(I("x^3, y^5"), s).colength == 15);
  auto r = minimal_reduction_ideal(I("x^3, x*y, y^4"), s);
  CHECK(r.b.num_generators() == 2);
  CHECK(I("x^3, x*y, y^4").contains(r.b));
  CHECK(r.colength == 7);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(multiplicity(I("x^2, x*y"), Route::Reduction), Error);
  CHECK_THROWS_AS(multiplicity(I("x^2 + y^3, y^4"), Route::Newton), Error);
  try {
    multiplicity(I("x^2, x*y"), Route::Difference);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMPrimary);
  }
  CHECK(multiplicity(Ideal<Rational>::unit(), Route::Reduction).value == 0);
}

TEST_CASE("non-monomial ideals: routes agree and bound the colength") {
  for (const char* g : {"x^2 - y^3, y^5", "x^2 + y^2, x*y^2, y^4", "x^3 + x*y, y^3 - x^2*y, x^2*y^2"}) {
    auto a = I(g);
    auto rep = multiplicity(a, Route::All, GeneralElementSampler{5});
    CHECK(rep.consistent);
    CHECK(local_colength(a).value <= rep.value);
  }
}

TEST_CASE("homogeneity and monotonicity on monomial ideals") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Exponent> g{{0, 1 + static_cast<int>(rng() % 5)}, {1 + static_cast<int>(rng() % 5), 0}};
    g.emplace_back(rng() % 4, rng() % 4);
    MonomialIdeal m(g);
    auto a = m.template to_ideal<Rational>();
    const auto ea = multiplicity(a, Route::Newton).value;
    CHECK(multiplicity(a, Route::Difference).value == ea);
    CHECK(multiplicity(symmetric_power(a, 2), Route::Newton).value == 4 * ea);
    CHECK(multiplicity(symmetric_power(a, 3), Route::Newton).value == 9 * ea);
    auto b = ideal_product(a, Ideal<Rational>::maximal());
    CHECK(multiplicity(b, Route::Newton).value >= ea);
  }
}

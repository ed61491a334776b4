#include <doctest.h>

#include "brim/io.hpp"
#include "brim/linkage.hpp"

using namespace brim;

namespace {
template <class K = Rational>
Ideal<K> I(const char* gens) {
  std::vector<Polynomial<K>> g;
  for (auto& p : parse_poly_list(gens)) g.push_back(convert<K>(p));
  return Ideal<K>(g);
}
template <class K = Rational>
PolyMatrix<K> mat(std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<Polynomial<K>>> out;
  for (auto& r : rows) {
    out.emplace_back();
    for (auto* s : r) out.back().push_back(parse<K>(s));
  }
  return PolyMatrix<K>(out);
}
}  // namespace

TEST_CASE("submatrix shapes") {
  CHECK(chain_shape(2, 0) == std::pair{2, 3});
  CHECK(chain_shape(2, 1) == std::pair{2, 1});
  CHECK(chain_shape(3, 1) == std::pair{3, 2});
  CHECK(chain_shape(3, 2) == std::pair{1, 2});
  CHECK(chain_shape(4, 3) == std::pair{2, 1});
}

TEST_CASE("single links") {
  GeneralElementSampler s{3};
  auto step = link_once(I("x^2, x*y, y^2"), s);
  CHECK(step.e == 4);
  CHECK(local_equal(step.next, I("x, y")));
  auto cube = link_once(I("x^3, x^2*y, x*y^2, y^3"), s);
  CHECK(cube.e == 9);
  CHECK(local_colength(cube.next).value == 3);
  CHECK_THROWS_AS(link_once(I("x^3, y^5"), s), Error);
}

TEST_CASE("link chains and the alternating sum") {
  GeneralElementSampler s{5};
  auto c2 = link_chain(I("x^2, x*y, y^2"), s);
  CHECK(c2.length() == 1);
  CHECK(colength_by_links(c2) == 3);
  auto c3 = link_chain(I("x^3, x^2*y, x*y^2, y^3"), s);
  CHECK(colength_by_links(c3) == 6);
  auto ci = link_chain(I("x^3, y^5"), s);
  CHECK(ci.length() == 0);
  CHECK(colength_by_links(ci) == 15);
  auto a = I("x^5, x^3*y, x*y^3, y^4");
  auto c = link_chain(a, s);
  CHECK(colength_by_links(c) == long(local_colength(a).value));
  for (std::size_t i = 0; i < c.length(); ++i) {
    CHECK(local_equal(colon(c.links[i], c.ideals[i + 1]), c.ideals[i]));
    CHECK(local_colength(c.ideals[i]).value + local_colength(c.ideals[i + 1]).value == c.multiplicities[i]);
  }
}

TEST_CASE("submatrix chain, rank two") {
  GeneralElementSampler s{1};
  ModulePresentation<Rational> m(mat({{"x", "0", "y"}, {"0", "y", "x"}}));
  auto sc = submatrix_chain(m, s);
  REQUIRE(sc.chain.ideals.size() == 2);
  CHECK(sc.chain.ideals[0] == I("x^2, x*y, y^2"));
  CHECK(local_equal(sc.chain.ideals[1], I("x, y")));
  auto f = br_by_links(m, s);
  CHECK(f.e_fitt0 == 4);
  CHECK(f.value == 3);
  auto aus = auslander_chain(reversed(sc.general));
  for (std::size_t i = 0; i < aus.size(); ++i) CHECK(aus[i] == sc.chain.ideals[i]);
  CHECK(colength_by_links(certified_auslander_chain(sc.general, s)) == 3);
}

TEST_CASE("submatrix chain, rank one and rank three") {
  GeneralElementSampler s{2};
  ModulePresentation<Rational> ideal(mat({{"x^2", "x*y", "y^2"}}));
  CHECK(submatrix_chain(ideal, s).chain.length() == 0);
  CHECK(br_by_links(ideal, s).value == 4);
  ModulePresentation<Rational> m3(mat({{"x", "y", "0", "0"}, {"0", "x", "y", "0"}, {"0", "0", "x", "y"}}));
  auto sc = submatrix_chain(m3, s);
  CHECK(sc.chain.length() == 2);
  const auto br = buchsbaum_rim(m3, Route::Reduction, s).value;
  CHECK(br_by_links(m3, s).value == long(br));
  CHECK(colength_by_links(sc.chain) == long(br));
}

#include <doctest.h>

#include "brim/bourbaki.hpp"
#include "brim/io.hpp"

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

TEST_CASE("Bourbaki ideals from an explicit G") {
  ModulePresentation<Rational> m(mat({{"x", "0", "y"}, {"0", "y", "x"}}));
  auto d = bourbaki_from(m, mat({{"y"}, {"x"}}));
  CHECK(d.i == I("x, y"));
  CHECK(d.j == I("x^2, y^2"));
  CHECK(local_colength(d.j).value - local_colength(d.i).value == module_colength(m).value);
  CHECK_THROWS_AS(bourbaki_from(m, mat({{"x"}, {"0"}})), Error);
  ModulePresentation<Rational> free(mat({{"1", "0"}, {"0", "x"}}));
  CHECK_THROWS_AS(bourbaki_from(free, mat({{"y"}, {"x"}})), Error);
}

TEST_CASE("Bourbaki ideals of the staircase family") {
  // s, t, i, j, d, e = 3, 2, 1, 2, 1, 1
  ModulePresentation<Rational> m(mat({{"-y^2", "x", "0", "0"}, {"x^3", "0", "x*y", "y^2"}}));
  auto d = bourbaki_from(m, mat({{"-y^2"}, {"x^3"}}));
  CHECK(d.i == I("x^3, y^2"));
  CHECK(local_equal(d.j, I("x^4, x*y^3, y^4")));
}

TEST_CASE("br from Bourbaki ideals") {
  GeneralElementSampler s{4};
  ModulePresentation<Rational> m(mat({{"x", "0", "y"}, {"0", "y", "x"}}));
  auto f = br_by_bourbaki(m, s);
  CHECK(f.e_j == 4);
  CHECK(f.e_i == 1);
  CHECK(f.value == 3);
  auto d = bourbaki_pair(m, s);
  CHECK(local_colength(d.j).value - local_colength(d.i).value == module_colength(m).value);
  CHECK(hilbert_samuel(d.j, s) == hilbert_samuel(minimal_reduction_module(m, s).u.fitt0(), s));
  ModulePresentation<Rational> m3(mat({{"x", "y", "0", "0"}, {"0", "x", "y", "0"}, {"0", "0", "x", "y"}}));
  CHECK(br_by_bourbaki(m3, s).value == long(buchsbaum_rim(m3, Route::Reduction, s).value));
}

TEST_CASE("all-rank formula, rank two") {
  GeneralElementSampler s{6};
  ModulePresentation<Rational> m(mat({{"x", "0", "y"}, {"0", "y", "x"}}));
  auto data = assume_pipeline(m, I("x, y"), I("x^2, y^2"), mat({{"y"}, {"x"}}), s);
  auto f = br_all_rank(data, s);
  CHECK(f.e_j == 4);
  CHECK(f.e_i == 1);
  CHECK(f.e_fitt_ij == 4);
  CHECK(f.e_fitt_ij_prime == 4);
  CHECK(f.e_fitt_ii_prime == 0);
  CHECK(f.value == 3);
  CHECK(local_colength(maximal_minors(data.n)).value - 0 == f.e_j - f.e_i);
}

TEST_CASE("all-rank formula, rank three") {
  GeneralElementSampler s{8};
  ModulePresentation<Rational> m(
      mat({{"x^2", "y^2", "0", "0", "x*y"}, {"0", "x^2", "y^2", "0", "0"}, {"0", "0", "x^2", "y^2", "x*y"}}));
  auto bd = bourbaki_pair(m, s);
  auto data = assume_pipeline(m, bd, s);
  auto f = br_all_rank(data, s);
  CHECK(f.value == long(buchsbaum_rim(m, Route::Reduction, s).value));
  CHECK(long(local_colength(maximal_minors(data.n)).value) - long(local_colength(maximal_minors(data.b)).value) ==
        f.e_j - f.e_i);
}

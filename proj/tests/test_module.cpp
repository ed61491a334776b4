#include <doctest.h>

#include "brim/io.hpp"
#include "brim/module.hpp"

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

TEST_CASE("minors and Fitting ideals") {
  auto p = mat({{"x", "0", "y"}, {"0", "y", "x"}});
  CHECK(fitting_ideal(p, 0) == I("x^2, x*y, y^2"));
  CHECK(fitting_ideal(p, 1) == I("x, y"));
  CHECK(fitting_ideal(p, 2).is_unit());
  CHECK(fitting_ideal(mat({{"x"}, {"y"}}), 0).is_zero());
  auto m = mat({{"x", "y", "1"}, {"x^2", "0", "y"}, {"1", "x", "x*y"}});
  CHECK(to_string(determinant(m)) == to_string(parse_poly("-x^3*y^2 + x^3 - x^2*y + y^2")));
  CHECK(minors(m, 2).size() == 9);
  CHECK(to_string(determinant(mat({{"x", "y"}, {"y", "x"}}).transpose())) == "x^2 - y^2");
}

TEST_CASE("matrix products and slices") {
  auto p = mat({{"x", "0", "y"}, {"0", "y", "x"}});
  auto c = PolyMatrix<Rational>::constant({{1, 0}, {0, 1}, {1, 1}});
  auto q = p * c;
  CHECK(to_string(q(0, 0)) == "x + y");
  CHECK(to_string(q(1, 1)) == "x + y");
  CHECK(p.trailing(1, 2)(0, 0) == parse_poly("y"));
  CHECK(p.leading(2, 1)(0, 0) == parse_poly("x"));
}

TEST_CASE("module colength") {
  ModulePresentation<Rational> m(mat({{"x", "0", "y"}, {"0", "y", "x"}}));
  CHECK(module_colength(m).value == 3);
  ModulePresentation<Rational> mm(mat({{"x", "y", "0", "0"}, {"0", "0", "x", "y"}}));
  CHECK(module_colength(mm).value == 2);
}

TEST_CASE("Rees reduction test") {
  ModulePresentation<Rational> m(mat({{"x", "0", "y"}, {"0", "y", "x"}}));
  CHECK(is_reduction_module(m, m));
  ModulePresentation<Rational> u(m.matrix().select_columns({0, 1}));
  CHECK_FALSE(is_reduction_module(u, m));
  ModulePresentation<Rational> outside(mat({{"1"}, {"0"}}));
  CHECK_THROWS_AS(is_reduction_module(outside, m), Error);
}

TEST_CASE("minimal reductions of modules") {
  GeneralElementSampler s{4};
  ModulePresentation<Rational> m(mat({{"x", "0", "y"}, {"0", "y", "x"}}));
  CHECK(minimal_reduction_module(m, s).u.matrix() == m.matrix());
  ModulePresentation<Rational> big(mat({{"x^2", "x*y", "y^2", "0"}, {"y^2", "0", "x^2", "x*y"}}));
  auto r = minimal_reduction_module(big, s);
  CHECK(r.u.num_generators() == 3);
  CHECK(is_reduction_module(r.u, big, s));
  CHECK(module_colength(r.u).value == r.colength);
  ModulePresentation<Rational> mm(mat({{"x", "y", "0", "0"}, {"0", "0", "x", "y"}}));
  auto rr = minimal_reduction_module(mm, s);
  CHECK(rr.colength == 3);
  CHECK(module_colength(rr.u).value == 3);
}

TEST_CASE("Buchsbaum-Rim multiplicity") {
  GeneralElementSampler s{2};
  ModulePresentation<Rational> m(mat({{"x", "0", "y"}, {"0", "y", "x"}}));
  CHECK(buchsbaum_rim(m, Route::Reduction, s).value == 3);
  ModulePresentation<Rational> ideal(mat({{"x^2", "x*y", "y^2"}}));
  CHECK(buchsbaum_rim(ideal, Route::Reduction, s).value == 4);
  auto rep = buchsbaum_rim(m, Route::All, s, 7);
  CHECK(rep.consistent);
  CHECK(rep.value == 3);
  CHECK(module_colength(m).value <= rep.value);
}

TEST_CASE("lambda table") {
  ModulePresentation<Rational> maximal(mat({{"x", "y"}}));
  auto t = lambda_table(maximal, 5);
  CHECK(t.values == std::vector<std::size_t>{1, 3, 6, 10, 15});
  CHECK(t.br == 1u);
  ModulePresentation<Rational> m(mat({{"x", "0", "y"}, {"0", "y", "x"}}));
  CHECK(lambda_table(m, 7).br == 3u);
  ModulePresentation<Fp> mm(mat<Fp>({{"x", "y", "0", "0"}, {"0", "0", "x", "y"}}));
  CHECK(lambda_table(mm, 7).br == 3u);
}

TEST_CASE("reduction and lambda routes agree on a four-generated module") {
  ModulePresentation<Rational> m(mat({{"x^2", "x*y", "y^2", "0"}, {"y^2", "0", "x^2", "x*y"}}));
  auto rep = buchsbaum_rim(m, Route::All, GeneralElementSampler{1}, 8);
  CHECK(rep.consistent);
  CHECK(rep.value == 12);
  CHECK(module_colength(m).value < rep.value);
}

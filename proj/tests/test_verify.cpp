#include <doctest.h>

#include "brim/verify.hpp"

using namespace brim;

TEST_CASE("exact integers in reports") {
  CHECK(exact(42).is_number_integer());
  CHECK(exact(1LL << 53).is_number_integer());
  CHECK(exact((1LL << 53) + 1) == "9007199254740993");
  CHECK(exact(-(1LL << 53) - 1).is_string());
}

TEST_CASE("field names") {
  CHECK(parse_field("q") == FieldKind::Q);
  CHECK(parse_field("fp") == FieldKind::Fp);
  CHECK_THROWS_AS(parse_field("r"), Error);
}

TEST_CASE("random inputs are reproducible and well formed") {
  for (int k = 0; k < 40; ++k) {
    auto r1 = case_stream(3, 1, k), r2 = case_stream(3, 1, k);
    const auto a = random_monomial_ideal(r1, 5, 12);
    CHECK(a == random_monomial_ideal(r2, 5, 12));
    CHECK(a.is_m_primary());
    CHECK(a.size() >= 3);
    CHECK(a.size() <= 5);
    for (auto [x, y] : a.generators()) CHECK(std::max(x, y) <= 12);
  }
  auto rng = case_stream(0, 2, 0);
  const auto m = random_module<Fp>(rng, 3, 5, 2);
  CHECK(m.rank() == 3);
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < m.num_generators(); ++j) CHECK(m.matrix()(i, j).coefficient(Monomial{}).is_zero());
}

TEST_CASE("suites over a small budget") {
  SuiteOptions opt;
  opt.count = 4;
  for (const char* name : {"rankone", "ingclosed", "shortformula", "thmallrank"}) {
    const auto r = run_suite(name, opt);
    CHECK_MESSAGE(r["fail"] == 0, name, r.dump());
    CHECK(r["pass"] == 4);
    CHECK(run_suite(name, opt).dump() == r.dump());
  }
  opt.field = FieldKind::Fp;
  opt.max = 2;
  const auto j = run_suite("jones", opt);
  CHECK(j["fail"] == 0);
  CHECK(j["area_mismatch"] == 0);
  CHECK(j["count"] == 2 * 2 * 2 * 2 * 8);
  CHECK_THROWS_AS(run_suite("nonsense", opt), Error);
}

TEST_CASE("counterexample over a prime field") {
  const auto c = counterexample<Fp>(GeneralElementSampler{});
  CHECK(c.e_i == 280);
  CHECK(c.e_j == 744);
  CHECK(c.e_f0_ij == 546);
  CHECK(c.e_f0_ij_prime == 594);
  CHECK(c.rhs == 416);
  CHECK(c.br == 420);
  CHECK(c.bad_condition != 0);
}

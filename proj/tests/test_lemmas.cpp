#include <doctest.h>

#include "brk/lemmas.hpp"
#include "brk/polyparse.hpp"

using namespace brkfq;

TEST_CASE("lemma suite passes with seed 1") {
  auto report = lemma_suite(1, 300);
  CHECK(report.results.size() == 12);
  for (const auto& r : report.results) {
    INFO(r.name << ": " << r.first_failure.value_or(""));
    CHECK(r.pass());
  }
  CHECK(report.passed());
}

TEST_CASE("lemma suite is deterministic") {
  auto a = lemma_suite(5, 50);
  auto b = lemma_suite(5, 50);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].failures == b.results[i].failures);
    CHECK(a.results[i].trials == b.results[i].trials);
  }
}

TEST_CASE("product expansion over F_2") {
  FieldSpec f2(2);
  auto f = parse_poly("x1 + 1", f2, 1, 'x');
  auto lt = leading_monomial(f * f);
  CHECK(lt.monomial == Monomial{2});
  CHECK(lt.monomial == leading_monomial(f).monomial + leading_monomial(f).monomial);
  CHECK(f * f == parse_poly("x1^2 + 1", f2, 1, 'x'));
}

TEST_CASE("derivative lowers multiplicity by at most |beta|") {
  FieldSpec f5(5);
  auto f = parse_poly("x1^2*x2", f5, 2, 'x');
  std::vector<std::uint32_t> origin{0, 0};
  CHECK(multiplicity(f, origin) == 3);
  CHECK(multiplicity(hasse_derivative(f, Monomial{1, 0}), origin) == 2);
}

TEST_CASE("surface scenario flags parameters outside the lemma") {
  Rng rng(3);
  // 5 * C(4,2) = 30 >= C(7,2) = 21: existence is not forced.
  auto r = check_mult_inputsubset(rng, {5, 2, 1, 2, 1, 3, 5}, 3);
  CHECK_FALSE(r.pass());
  // ell (D - w) < (M - w) q fails: 2 * 9 = 18 >= 15.
  r = check_mult_inputsubset(rng, {5, 2, 1, 2, 1, 3, 9}, 3);
  CHECK_FALSE(r.pass());
}

TEST_CASE("random generators respect their contracts") {
  Rng rng(4);
  FieldSpec f7(7);
  for (int i = 0; i < 200; ++i) {
    auto h = gen::homogeneous(f7, 2, 3, 4, rng);
    REQUIRE(h.is_homogeneous_of_degree(3));
    auto a = gen::point(f7, 3, rng);
    const auto factors = static_cast<std::uint32_t>(rng.below(4));
    auto f = gen::vanishing_at(f7, a, factors, 2, rng);
    REQUIRE_FALSE(f.is_zero());
    REQUIRE(multiplicity(f, a) >= factors);
  }
}

#include <doctest.h>

#include "brk/errors.hpp"
#include "brk/lemmas.hpp"
#include "brk/multipoly.hpp"
#include "brk/polyparse.hpp"
#include "oracles.hpp"

using namespace brkfq;

namespace {

MultiPoly P(const char* text, std::uint32_t q, std::size_t arity) {
  return parse_poly(text, FieldSpec(q), arity, 'x');
}

}  // namespace

TEST_CASE("grlex examples") {
  CHECK(grlex_cmp(Monomial{2, 0}, Monomial{1, 2}) < 0);
  CHECK(grlex_cmp(Monomial{1, 1}, Monomial{2, 0}) < 0);
  CHECK(grlex_cmp(Monomial{1, 1}, Monomial{1, 1}) == 0);
  CHECK_THROWS_AS((void)grlex_cmp(Monomial{1}, Monomial{1, 0}), ArityMismatch);
}

TEST_CASE("grlex is a total order on small monomials") {
  std::vector<Monomial> all;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<Monomial> mons;
    for (std::uint32_t d = 0; d <= 5; ++d) {
      for (auto& x : monomials_of_degree(m, d)) mons.push_back(x);
    }
    for (const auto& a : mons) {
      for (const auto& b : mons) {
        const auto ab = grlex_cmp(a, b);
        REQUIRE((ab == 0) == (a == b));
        REQUIRE((grlex_cmp(b, a) < 0) == (ab > 0));
      }
    }
    // The enumeration is strictly ascending, and ascending order plus
    // antisymmetry gives transitivity.
    for (std::size_t i = 0; i + 1 < mons.size(); ++i) REQUIRE(grlex_cmp(mons[i], mons[i + 1]) < 0);
    if (m <= 2) {
      for (const auto& a : mons) {
        for (const auto& b : mons) {
          for (const auto& c : mons) {
            if (grlex_cmp(a, b) < 0 && grlex_cmp(b, c) < 0) REQUIRE(grlex_cmp(a, c) < 0);
          }
        }
      }
    }
  }
}

TEST_CASE("monomial caps and arithmetic") {
  CHECK_THROWS_AS(Monomial({Monomial::kMaxExponent + 1}), CapExceeded);
  CHECK_THROWS_AS((Monomial{1, 0} - Monomial{0, 1}), DomainError);
  CHECK((Monomial{3, 2} - Monomial{1, 2}) == Monomial{2, 0});
  CHECK(Monomial{1, 2, 3}.tail(2) == Monomial{2, 3});
  CHECK(Monomial{1, 2, 3}.head(1) == Monomial{1});
  CHECK(monomials_of_degree(2, 2) == std::vector<Monomial>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("leading monomial") {
  auto lt = leading_monomial(P("2*x1^2 + x1*x2 + 3", 5, 2));
  CHECK(lt.monomial == Monomial{2, 0});
  CHECK(lt.coeff.value() == 2);
  lt = leading_monomial(P("x2^3 + x1^2", 5, 2));
  CHECK(lt.monomial == Monomial{0, 3});
  CHECK(lt.coeff.value() == 1);
  lt = leading_monomial(P("4", 5, 2));
  CHECK(lt.monomial == Monomial{0, 0});
  CHECK(lt.coeff.value() == 4);
  CHECK_THROWS_AS(leading_monomial(MultiPoly(FieldSpec(5), 2)), DomainError);
}

TEST_CASE("polynomial arithmetic") {
  CHECK(P("x1 + x2", 3, 2) * P("x1 - x2", 3, 2) == P("x1^2 + 2*x2^2", 3, 2));
  CHECK(P("x1 + 1", 2, 1).pow(2) == P("x1^2 + 1", 2, 1));
  CHECK((MultiPoly(FieldSpec(5), 2) * P("x1 + 3", 5, 2)).is_zero());
  CHECK((P("x1 + x2", 5, 2) - P("x1 + x2", 5, 2)).is_zero());
  CHECK(P("2*x1^2 + x1*x2 + 3", 5, 2).degree() == 2);
  CHECK(MultiPoly(FieldSpec(5), 2).degree() == -1);
  CHECK(P("2*x1^2 + x1*x2 + 3", 5, 2).to_string() == "2*x1^2 + x1*x2 + 3");
  CHECK_THROWS_AS(P("x1", 5, 2) + P("x1", 7, 2), FieldMismatch);
  CHECK_THROWS_AS(P("x1", 5, 2) + P("x1", 5, 3), ArityMismatch);
}

TEST_CASE("normal form never stores zero coefficients") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    FieldSpec spec(std::vector<std::uint32_t>{2, 3, 5}[rng.below(3)]);
    auto f = gen::poly(spec, 2, 3, 4, rng);
    auto g = gen::poly(spec, 2, 3, 4, rng);
    for (const auto& h : {f + g, f - g, f * g, f - f}) {
      for (const auto& [m, c] : h.terms()) REQUIRE(c != 0);
    }
  }
}

TEST_CASE("evaluate") {
  FieldSpec f5(5);
  std::vector<std::uint32_t> at{2, 3};
  CHECK(P("x1^2*x2", 5, 2).evaluate(at).value() == 2);
  std::vector<std::uint32_t> origin{0, 0};
  CHECK(P("3*x1*x2 + x1 + 4", 5, 2).evaluate(origin).value() == 4);
  CHECK(MultiPoly(f5, 2).evaluate(at).value() == 0);
  std::vector<std::uint32_t> bad{1};
  CHECK_THROWS_AS(P("x1", 5, 2).evaluate(bad), ArityMismatch);
}

TEST_CASE("compose") {
  FieldSpec f5(5);
  std::vector<MultiPoly> q{parse_poly("t1", f5, 1), parse_poly("t1^2", f5, 1)};
  CHECK(compose(P("x1*x2", 5, 2), q) == parse_poly("t1^3", f5, 1));
  std::vector<MultiPoly> id{parse_poly("t1", f5, 2), parse_poly("t2", f5, 2)};
  auto f = P("3*x1^2*x2 + x2 + 1", 5, 2);
  CHECK(compose(f, id) == parse_poly("3*t1^2*t2 + t2 + 1", f5, 2));
  std::vector<MultiPoly> q2{parse_poly("t1", f5, 2), parse_poly("t1 + t2", f5, 2)};
  CHECK(compose(P("x1 + x2", 5, 2), q2) == parse_poly("2*t1 + t2", f5, 2));
  PolyLimits tight;
  tight.max_terms = 3;
  std::vector<MultiPoly> wide{parse_poly("t1 + t2 + 1", f5, 2), parse_poly("t1 + t2", f5, 2)};
  CHECK_THROWS_AS(compose(P("x1^3", 5, 2), wide, tight), CapExceeded);
}

TEST_CASE("hasse derivative examples") {
  CHECK(hasse_derivative(P("x1^3", 3, 1), Monomial{2}).is_zero());
  CHECK(hasse_derivative(P("x1^2*x2", 5, 2), Monomial{1, 0}) == P("2*x1*x2", 5, 2));
  CHECK(hasse_shift_oracle(P("x1^2*x2", 5, 2), Monomial{1, 0}) == P("2*x1*x2", 5, 2));
  auto f = P("x1^2*x2 + 4*x2 + 1", 5, 2);
  CHECK(hasse_derivative(f, Monomial{0, 0}) == f);
  CHECK(hasse_shift_oracle(f, Monomial{3, 1}).is_zero());
  CHECK(hasse_derivative(f, Monomial{3, 1}).is_zero());
  std::vector<std::uint32_t> at{2, 3};
  CHECK(hasse_derivative_at(f, Monomial{1, 0}, at) == hasse_derivative(f, Monomial{1, 0}).evaluate(at));
}

TEST_CASE("hasse derivative matches the shift expansion") {
  Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    FieldSpec spec(std::vector<std::uint32_t>{2, 3, 5, 7}[rng.below(4)]);
    const std::size_t m = rng.between(1, 3);
    auto f = gen::poly(spec, m, 6, 5, rng);
    auto beta = gen::monomial(m, 4, rng);
    REQUIRE(hasse_derivative(f, beta) == hasse_shift_oracle(f, beta));
    auto a = gen::point(spec, m, rng);
    REQUIRE(hasse_derivative_at(f, beta, a) == hasse_derivative(f, beta).evaluate(a));
  }
}

TEST_CASE("multiplicity examples") {
  std::vector<std::uint32_t> origin{0, 0};
  CHECK(multiplicity(P("x1^2*x2", 5, 2), origin) == 3);
  std::vector<std::uint32_t> p{1, 1};
  CHECK(multiplicity(P("x1^2*x2 + 1", 5, 2), p) == 0);
  std::vector<std::uint32_t> one{1};
  CHECK(multiplicity(P("x1^2 - 2*x1 + 1", 5, 1), one) == 2);
  CHECK(multiplicity(MultiPoly(FieldSpec(5), 2), origin) == kInfiniteMultiplicity);
}

TEST_CASE("multiplicity agrees with the lowest degree of f(a + y)") {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    FieldSpec spec(std::vector<std::uint32_t>{2, 3, 5, 7}[rng.below(4)]);
    const std::size_t m = rng.between(1, 3);
    auto a = gen::point(spec, m, rng);
    auto f = gen::vanishing_at(spec, a, static_cast<std::uint32_t>(rng.below(4)), 2, rng);
    REQUIRE(multiplicity(f, a) == oracle::multiplicity_by_shift(f, a));
    auto b = gen::point(spec, m, rng);
    REQUIRE(multiplicity(f, b) == oracle::multiplicity_by_shift(f, b));
  }
}

TEST_CASE("zero census examples") {
  std::vector<std::uint32_t> f3{0, 1, 2};
  auto c = zero_census(P("x1*x2", 3, 2), f3);
  CHECK(c.zeros == 5);
  CHECK(c.bound == 6);
  std::vector<std::uint32_t> f5{0, 1, 2, 3, 4};
  c = zero_census(P("x1^2", 5, 1), f5);
  CHECK(c.weighted == 2);
  CHECK(c.bound == 2);
  c = zero_census(P("3", 5, 2), f5);
  CHECK(c.zeros == 0);
  CHECK(c.weighted == 0);
  CHECK_THROWS_AS(zero_census(MultiPoly(FieldSpec(5), 2), f5), DomainError);
  PolyLimits tight;
  tight.census_points = 10;
  CHECK_THROWS_AS(zero_census(P("x1", 5, 2), f5, tight), CapExceeded);
}

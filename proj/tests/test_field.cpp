#include <doctest.h>

#include "brk/errors.hpp"
#include "brk/field.hpp"
#include "brk/random.hpp"
#include "oracles.hpp"

using namespace brkfq;

TEST_CASE("field arithmetic over F_5 and F_7") {
  FieldSpec f5(5);
  CHECK((f5.elem(3) + f5.elem(4)).value() == 2);
  CHECK((f5.elem(3) * f5.elem(4)).value() == 2);
  CHECK(f5.elem(2).inv().value() == 3);
  CHECK(f5.inv(2) == 3);
  CHECK(FieldSpec(7).elem(3).inv().value() == 5);
  CHECK(f5.elem(-1).value() == 4);
  CHECK((-f5.elem(2)).value() == 3);
  CHECK((f5.elem(1) / f5.elem(2)).value() == 3);
  CHECK(f5.elem(2).pow(4).value() == 1);
}

TEST_CASE("field errors") {
  FieldSpec f5(5);
  CHECK_THROWS_AS(f5.inv(0), DomainError);
  CHECK_THROWS_AS(f5.zero().inv(), DomainError);
  CHECK_THROWS_AS(f5.elem(1) + FieldSpec(7).elem(1), FieldMismatch);
  CHECK_THROWS_AS(FieldSpec(6), DomainError);
  CHECK_THROWS_AS(FieldSpec(1), DomainError);
  CHECK_THROWS_AS(FieldSpec((std::uint64_t{1} << 31) + 11), DomainError);
  CHECK_NOTHROW(FieldSpec(2147483647));
}

TEST_CASE("a * inv(a) = 1 for every nonzero a, q <= 101") {
  for (std::uint32_t q = 2; q <= 101; ++q) {
    if (!is_prime(q)) continue;
    FieldSpec f(q);
    for (std::uint32_t a = 1; a < q; ++a) REQUIRE(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("large modulus arithmetic does not overflow") {
  FieldSpec f(2147483647);
  const std::uint32_t a = 2147483646;
  CHECK(f.mul(a, a) == 1);
  CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.add(a, a) == 2147483645);
}

TEST_CASE("multi_binom examples") {
  FieldSpec f5(5);
  std::vector<std::uint32_t> a{2, 1}, b{1, 1};
  CHECK(multi_binom(a, b, f5).value() == 2);
  std::vector<std::uint32_t> c{1, 0}, d{0, 2};
  CHECK(multi_binom(c, d, f5).value() == 0);
  std::vector<std::uint32_t> e{5}, g{2};
  CHECK(multi_binom(e, g, f5).value() == 0);
  std::vector<std::uint32_t> one{1};
  CHECK_THROWS_AS(multi_binom(a, one, f5), ArityMismatch);
}

TEST_CASE("multi_binom(alpha, 0) = multi_binom(alpha, alpha) = 1") {
  Rng rng(11);
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    FieldSpec f(q);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::uint32_t> alpha(rng.between(1, 4));
      for (auto& x : alpha) x = static_cast<std::uint32_t>(rng.below(60));
      std::vector<std::uint32_t> zero(alpha.size(), 0);
      CHECK(multi_binom(alpha, zero, f).value() == 1);
      CHECK(multi_binom(alpha, alpha, f).value() == 1);
    }
  }
}

TEST_CASE("Lucas binomials agree with exact integers") {
  Rng rng(12);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 5, 7}[rng.below(4)];
    FieldSpec f(q);
    const std::size_t m = rng.between(1, 3);
    std::vector<std::uint32_t> alpha(m), beta(m);
    std::uint32_t left = 40;
    std::uint32_t expected = 1;
    for (std::size_t i = 0; i < m; ++i) {
      alpha[i] = static_cast<std::uint32_t>(rng.below(left + 1));
      left -= alpha[i];
      beta[i] = static_cast<std::uint32_t>(rng.below(alpha[i] + 2));
      expected = expected * oracle::binom_mod(alpha[i], beta[i], q) % q;
    }
    REQUIRE(multi_binom(alpha, beta, f).value() == expected);
  }
}

#include <doctest.h>

#include <set>

#include "brk/errors.hpp"
#include "brk/lemmas.hpp"
#include "brk/polyparse.hpp"
#include "brk/vanish.hpp"
#include "oracles.hpp"

using namespace brkfq;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Point> random_points(const FieldSpec& spec, std::size_t n, std::size_t count, Rng& rng) {
  std::set<Point> pts;
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) space *= spec.modulus();
  count = std::min<std::uint64_t>(count, space);
  while (pts.size() < count) pts.insert(gen::point(spec, n, rng));
  return {pts.begin(), pts.end()};
}

}  // namespace

TEST_CASE("monomial basis") {
  auto b = monomials_up_to(1, 2);
  CHECK(b.monomials == std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(monomials_up_to(2, 2).monomials.size() == 6);
  CHECK(monomials_up_to(0, 3).monomials == std::vector<Monomial>{{0, 0, 0}});
  CHECK(monomials_up_to(4, 3).monomials.size() == binom(7, 3));
  InterpolationLimits tight;
  tight.max_basis = 5;
  CHECK_THROWS_AS(monomials_up_to(2, 2, tight), CapExceeded);
}

TEST_CASE("find_vanishing examples") {
  FieldSpec f3(3);
  std::vector<Point> two{{0, 0}, {1, 1}};
  auto in = find_vanishing(f3, 2, two, 1);
  REQUIRE(in.witness);
  CHECK(*in.witness == parse_poly("x1 + 2*x2", f3, 2, 'x'));

  std::vector<Point> all;
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) all.push_back({a, b});
  }
  in = find_vanishing(f3, 2, all, 1);
  CHECK_FALSE(in.witness);
  CHECK(in.rank == 3);

  std::vector<Point> none;
  in = find_vanishing(f3, 2, none, 0);
  REQUIRE(in.witness);
  CHECK(*in.witness == MultiPoly::constant(f3, 2, 1));
}

TEST_CASE("find_vanishing_mult examples") {
  FieldSpec f3(3);
  std::vector<Point> origin{{0, 0}};
  auto in = find_vanishing_mult(f3, 2, origin, 2, 2);
  REQUIRE(in.witness);
  CHECK(multiplicity(*in.witness, origin[0]) >= 2);
  CHECK(*in.witness == parse_poly("x2^2", f3, 2, 'x'));
  CHECK(in.rank == 3);
  CHECK(in.unknowns == 6);

  in = find_vanishing_mult(f3, 2, origin, 1, 3);
  CHECK_FALSE(in.witness);
  CHECK(in.rank == 3);
}

TEST_CASE("multiplicity one reproduces plain vanishing") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    FieldSpec spec(std::vector<std::uint32_t>{3, 5, 7}[rng.below(3)]);
    const std::size_t n = rng.between(2, 3);
    const auto d = static_cast<std::uint32_t>(rng.below(4));
    auto pts = random_points(spec, n, rng.between(0, 2 * binom(d + n, n)), rng);
    auto a = find_vanishing(spec, n, pts, d);
    auto b = find_vanishing_mult(spec, n, pts, d, 1);
    REQUIRE(a.witness.has_value() == b.witness.has_value());
    if (a.witness) REQUIRE(*a.witness == *b.witness);
    REQUIRE(a.rank == b.rank);
  }
}

TEST_CASE("a witness exists whenever the counting inequality holds") {
  Rng rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    FieldSpec spec(std::vector<std::uint32_t>{3, 5, 7}[rng.below(3)]);
    const std::size_t n = rng.between(2, 3);
    const auto d = static_cast<std::uint32_t>(rng.between(1, 4));
    const auto mult = static_cast<std::uint32_t>(rng.between(1, 3));
    const std::uint64_t unknowns = binom(d + n, n);
    const std::uint64_t per_point = binom(mult + n - 1, n);
    if (per_point >= unknowns) continue;
    const std::size_t max_points = (unknowns - 1) / per_point;
    auto pts = random_points(spec, n, rng.between(1, max_points), rng);
    REQUIRE(per_point * pts.size() < unknowns);
    auto in = find_vanishing_mult(spec, n, pts, d, mult);
    REQUIRE(in.witness);
    REQUIRE(in.witness->degree() <= d);
    for (const auto& p : pts) REQUIRE(oracle::multiplicity_by_shift(*in.witness, p) >= mult);
    if (mult == 1) REQUIRE(oracle::vanishes_on(*in.witness, pts));
  }
}

TEST_CASE("interpolation caps") {
  FieldSpec f3(3);
  std::vector<Point> pts{{0, 0}, {1, 2}};
  InterpolationLimits tight;
  tight.max_matrix_entries = 10;
  CHECK_THROWS_AS(find_vanishing_mult(f3, 2, pts, 3, 3, tight), CapExceeded);
  std::vector<Point> bad{{0, 5}};
  CHECK_THROWS(find_vanishing(f3, 2, bad, 1));
  std::vector<Point> short_pt{{0}};
  CHECK_THROWS_AS(find_vanishing(f3, 2, short_pt, 1), ArityMismatch);
}

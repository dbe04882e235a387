#include <doctest.h>

#include "brk/errors.hpp"
#include "brk/lemmas.hpp"
#include "brk/polyparse.hpp"
#include "brk/theorem.hpp"
#include "oracles.hpp"

using namespace brkfq;

namespace {

SurfaceFamilySpec parabola(std::uint32_t q) {
  FieldSpec spec(q);
  return {spec, 2, 1, 2, {parse_poly("t1^2", spec, 1)}};
}

const Check& find_check(const BoundReport& r, const std::string& prefix) {
  for (const auto& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) return c;
  }
  FAIL("missing check " << prefix);
  return r.checks.front();
}

}  // namespace

TEST_CASE("pm bound") {
  CHECK(pm_bound(5, 2, 2) == 6);
  CHECK(pm_bound(3, 3, 2) == 4);
  CHECK(pm_bound(3, 2, 3) == 1);
  CHECK(pm_bound(5, 4, 7) == 1);
  CHECK_THROWS_AS(pm_bound(5, 2, 1), DomainError);
  CHECK_THROWS_AS(pm_bound(6, 2, 2), DomainError);
}

TEST_CASE("mm bound") {
  CHECK(mm_bound(5, 2, 1) == Rational(25, 4));
  CHECK(mm_bound(5, 2, 2) == Rational(400, 121));
  CHECK(mm_bound(2, 2, 1) == Rational(1));
  CHECK(mm_bound(3, 2, 1) == Rational(9, 4));
  CHECK(rational_string(mm_bound(5, 2, 2)) == "400/121");
  CHECK(rational_string(Rational(3)) == "3/1");
  CHECK(ceil(Rational(21, 10)) == 3);
  CHECK(ceil(Rational(4)) == 4);
}

TEST_CASE("mm claim bound") {
  auto c = mm_claim_bound(3, 2, 1, 3);
  CHECK(c.degree == 5);
  CHECK(c.multiplicity == 4);
  CHECK(c.ratio == Rational(21, 10));
  c = mm_claim_bound(3, 2, 1, 30);
  CHECK(c.degree == 59);
  CHECK(c.multiplicity == 40);
  CHECK(c.ratio == Rational(183, 82));
  CHECK(mm_bound(3, 2, 1) - c.ratio < mm_bound(3, 2, 1) - mm_claim_bound(3, 2, 1, 3).ratio);
  c = mm_claim_bound(3, 2, 2, 3);
  CHECK(c.multiplicity == 5);
  CHECK(c.ratio == Rational(7, 5));
  CHECK_THROWS_AS(mm_claim_bound(3, 2, 1, 4), DomainError);
  CHECK_THROWS_AS(mm_claim_bound(3, 2, 1, 0), DomainError);
}

TEST_CASE("mm claim is nondecreasing in k and stays below mm bound") {
  for (std::uint64_t q : {3u, 5u, 7u}) {
    for (std::uint64_t n : {2u, 3u}) {
      for (std::uint64_t ell = 1; ell <= 3 && ell < q; ++ell) {
        Rational prev = 0;
        for (std::uint64_t j = 1; j <= 3; ++j) {
          auto c = mm_claim_bound(q, n, ell, j * q);
          CHECK(c.ratio >= prev);
          CHECK(c.ratio <= mm_bound(q, n, ell));
          prev = c.ratio;
        }
      }
    }
  }
}

TEST_CASE("substituted key") {
  std::vector<Monomial> a1{Monomial{2}, Monomial{3}};
  CHECK(substituted_key(Monomial{1, 2, 0}, a1) == Monomial{5});
  CHECK(substituted_key(Monomial{0, 0, 0}, a1) == Monomial{0});
  std::vector<Monomial> a2{Monomial{1, 1}};
  CHECK(substituted_key(Monomial{1, 0, 1}, a2) == Monomial{2, 1});
  CHECK(substituted_key(Monomial{0, 2}, parabola(5)) == Monomial{4});
}

TEST_CASE("leading coefficient polynomial examples") {
  FieldSpec f5(5);
  auto fam = parabola(5);
  auto sel = leading_selection(parse_poly("x2 + x1^2", f5, 2, 'x'), fam);
  CHECK(sel.key == Monomial{2});
  CHECK(sel.exponents.size() == 2);
  CHECK(leading_coefficient_poly(parse_poly("x2 + x1^2", f5, 2, 'x'), fam) ==
        parse_poly("r1 + 1", f5, 1, 'r'));
  CHECK(leading_coefficient_poly(parse_poly("x1", f5, 2, 'x'), fam) == MultiPoly::constant(f5, 1, 1));
  CHECK(leading_coefficient_poly(parse_poly("x2^2", f5, 2, 'x'), fam, Monomial{0, 1}) ==
        parse_poly("2*r1", f5, 1, 'r'));
  auto bad = fam;
  bad.h[0] = MultiPoly(f5, 1);
  CHECK_THROWS(leading_coefficient_poly(parse_poly("x2", f5, 2, 'x'), bad));
}

TEST_CASE("restrict to surface") {
  FieldSpec f5(5);
  SurfaceInstance inst{{2}, {0, 0}, {parse_poly("t1^2", f5, 1)}};
  CHECK(restrict_to_surface(parse_poly("x2", f5, 2, 'x'), inst) == parse_poly("2*t1^2", f5, 1));
  CHECK(restrict_to_surface(MultiPoly::constant(f5, 2, 3), inst) == MultiPoly::constant(f5, 1, 3));
}

TEST_CASE("leading coefficient polynomial matches interpolation over dilations") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    FieldSpec spec(7);
    const std::size_t n = rng.between(2, 3);
    const std::size_t d = rng.between(1, n - 1);
    const auto ell = static_cast<std::uint32_t>(rng.between(1, 2));
    auto fam = gen::family(spec, n, d, ell, rng);
    auto f = gen::poly(spec, n, 4, 6, rng);
    auto sel = leading_selection(f, fam);
    auto lead = leading_coefficient_poly(f, fam);
    auto value = [&](const Point& rho) {
      SurfaceInstance inst{rho, Point(n, 0), fam.h};
      return restrict_to_surface(f, inst).coeff(sel.key).value();
    };
    REQUIRE(lead == oracle::interpolate_on_units(spec, n - d, value));
  }
}

TEST_CASE("polynomial-method verification") {
  auto set3 = build_brk_set(parabola(3), Strategy::canonical, 0);
  auto r = verify_theorem_pm(set3);
  CHECK(r.passed());
  CHECK(r.set_size == 7);
  CHECK(*r.pm == 3);
  CHECK(find_check(r, "no_vanishing_poly").pass);

  auto set5 = build_brk_set(parabola(5), Strategy::canonical, 0);
  r = verify_theorem_pm(set5);
  CHECK(r.passed());
  CHECK(r.set_size >= 6);

  auto broken = set3;
  broken.points.pop_back();
  CHECK_THROWS_AS(verify_theorem_pm(broken), InvalidSet);
  try {
    verify_theorem_pm(broken);
  } catch (const InvalidSet& e) {
    CHECK(e.verdict().clause == ValidationClause::containment);
  }
  auto linear = set3;
  linear.family.ell = 1;
  CHECK_THROWS_AS(verify_theorem_pm(linear), DomainError);
}

TEST_CASE("multiplicity verification") {
  auto set3 = build_brk_set(parabola(3), Strategy::canonical, 0);
  auto r = verify_theorem_mm(set3, 3);
  CHECK(r.passed());
  REQUIRE(r.mm_claim);
  CHECK(r.mm_claim->degree == 5);
  CHECK(r.mm_claim->multiplicity == 5);
  CHECK(r.mm_claim->ratio == Rational(7, 5));
  CHECK(find_check(r, "no_vanishing_poly").witness->find("rank 21 of 21") != std::string::npos);
  CHECK_THROWS_AS(verify_theorem_mm(set3, 4), DomainError);

  // ell = 1: the d-plane family x2 = rho t.
  FieldSpec f5(5);
  SurfaceFamilySpec plane{f5, 2, 1, 1, {parse_poly("t1", f5, 1)}};
  auto lines = build_brk_set(plane, Strategy::canonical, 0);
  r = verify_theorem_mm(lines, 5);
  CHECK(r.passed());
  CHECK(Rational(r.set_size) >= mm_bound(5, 2, 1));
}

TEST_CASE("diagnosis of a set that is too small") {
  auto set = build_brk_set(parabola(5), Strategy::canonical, 0);
  set.points.resize(2);
  set.provenance.clear();
  auto dx = diagnose_pm(set);
  REQUIRE(dx.witness);
  CHECK(dx.steps.front().pass);
  CHECK(dx.failing_step == "restrictions_vanish");
  bool lead_fails = false;
  for (const auto& s : dx.steps) {
    if (s.name == "leading_coefficient_vanishes") lead_fails = !s.pass;
  }
  CHECK(lead_fails);
  REQUIRE(dx.leading_poly);
  CHECK_FALSE(dx.leading_poly->is_zero());

  auto valid = build_brk_set(parabola(5), Strategy::canonical, 0);
  auto ok = diagnose_pm(valid);
  CHECK_FALSE(ok.witness);
  CHECK(ok.failing_step == "witness_exists");

  // A supplied witness that does not vanish on the set fails that step.
  auto given = diagnose_pm(valid, parse_poly("x1", FieldSpec(5), 2, 'x'));
  CHECK(given.failing_step == "witness_vanishes_on_set");
}

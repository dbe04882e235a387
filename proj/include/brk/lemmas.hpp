#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brk/brkset.hpp"
#include "brk/multipoly.hpp"
#include "brk/random.hpp"

namespace brkfq {

/// Random objects shared by the lemma suite and the tests.
namespace gen {

/// Monomial of total degree <= max_degree: degree uniform, then each unit
/// of degree lands on a uniform coordinate.
Monomial monomial(std::size_t arity, std::uint32_t max_degree, Rng& rng);
/// Nonzero polynomial with 1..max_terms random terms.
MultiPoly poly(const FieldSpec& spec, std::size_t arity, std::uint32_t max_degree,
               std::size_t max_terms, Rng& rng);
/// Nonzero homogeneous polynomial of exactly `degree`.
MultiPoly homogeneous(const FieldSpec& spec, std::size_t arity, std::uint32_t degree,
                      std::size_t max_terms, Rng& rng);
Point point(const FieldSpec& spec, std::size_t arity, Rng& rng);
/// A product of `factors` random affine forms through `at`, times a random
/// polynomial, so mult(result, at) >= factors.
MultiPoly vanishing_at(const FieldSpec& spec, const Point& at, std::uint32_t factors,
                       std::uint32_t extra_degree, Rng& rng);
/// Random family with random homogeneous h_i.
SurfaceFamilySpec family(const FieldSpec& spec, std::size_t n, std::size_t d, std::uint32_t ell,
                         Rng& rng);

}  // namespace gen

struct LemmaResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_failure;

  bool pass() const noexcept { return failures == 0 && trials > 0; }
};

struct LemmaReport {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<LemmaResult> results;

  bool passed() const;
};

/// Randomized checks of the grlex, Hasse-derivative, multiplicity and
/// Schwartz-Zippel lemmas, plus the two constructed scenarios. Lemma number i
/// (in report order) draws from Rng(seed + i * 2^32).
LemmaReport lemma_suite(std::uint64_t seed, std::uint64_t trials,
                        const std::vector<std::uint32_t>& moduli = {3, 5, 7});

LemmaResult check_mon_sum(Rng& rng, std::uint64_t trials);
LemmaResult check_pol_expansion(Rng& rng, std::uint64_t trials, const std::vector<std::uint32_t>& moduli);
LemmaResult check_pol_prod_ineq(Rng& rng, std::uint64_t trials, const std::vector<std::uint32_t>& moduli);
LemmaResult check_monomial_derivative_dominance(Rng& rng, std::uint64_t trials);
LemmaResult check_sum_derivative(Rng& rng, std::uint64_t trials, const std::vector<std::uint32_t>& moduli);
LemmaResult check_mult_composition(Rng& rng, std::uint64_t trials, const std::vector<std::uint32_t>& moduli);
LemmaResult check_schwartz_zippel(Rng& rng, std::uint64_t trials, const std::vector<std::uint32_t>& moduli);
LemmaResult check_extended_schwartz_zippel(Rng& rng, std::uint64_t trials, const std::vector<std::uint32_t>& moduli);
/// Closed-form Hasse derivative against the f(x+y) expansion, q in {2,3,5}.
LemmaResult check_hasse_form(Rng& rng, std::uint64_t trials);

/// Parameters for the vanishing-on-a-surface scenario: a degree-ell surface
/// C in F_q^n, f of degree <= D vanishing on C with multiplicity M, and the
/// claim that f^(beta) restricted to C is the zero polynomial for |beta| < k.
struct SurfaceVanishingParams {
  std::uint32_t q;
  std::size_t n;
  std::size_t d;
  std::uint32_t ell;
  std::uint32_t k;
  std::uint32_t mult;
  std::uint32_t degree;
};

/// Fails a surface instead of skipping it if the parameters violate either
/// C(M+n-1, n) q^d < C(D+n, n) or ell (D - w) < (M - w) q for w < k.
LemmaResult check_mult_inputsubset(Rng& rng, const SurfaceVanishingParams& params,
                                   std::uint64_t surfaces);

/// Falsification form of the reduction lemma, with the coefficients indexed
/// by one substituted-key class: some f_beta (|beta| < k) must be nonzero
/// somewhere on (F_q*)^(n-d).
LemmaResult check_hd_reduction(Rng& rng, std::uint64_t trials, const std::vector<std::uint32_t>& moduli);

}  // namespace brkfq

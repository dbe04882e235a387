#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brk/brkset.hpp"
#include "brk/errors.hpp"
#include "brk/vanish.hpp"

namespace brkfq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" in lowest terms (den printed even when 1).
std::string rational_string(const Rational& r);
BigInt ceil(const Rational& r);

/// Polynomial-method bound C(floor((q-1)/ell) + n, n). Requires ell >= 2.
BigInt pm_bound(std::uint64_t q, std::uint64_t n, std::uint64_t ell);

/// Method-of-multiplicities bound (q-1)^n / (ell + 1 - 2 ell/q)^n, exact.
Rational mm_bound(std::uint64_t q, std::uint64_t n, std::uint64_t ell);

struct MmClaim {
  std::uint64_t degree = 0;        // D = k(q-1) - 1
  std::uint64_t multiplicity = 0;  // M = (ell+1)k - 2 ell k / q
  Rational ratio;                  // C(D+n, n) / C(M+n-1, n)
};

/// Finite-k bound; k must be a positive multiple of q.
MmClaim mm_claim_bound(std::uint64_t q, std::uint64_t n, std::uint64_t ell, std::uint64_t k);

/// alpha^i: grlex-leading exponent of each h_i.
std::vector<Monomial> leading_exponents(const SurfaceFamilySpec& family);

/// Exponent of (t, t^alpha^1, ..., t^alpha^(n-d))^beta, i.e.
/// (beta_1..beta_d) + sum_i beta_{d+i} alpha^i.
Monomial substituted_key(const Monomial& beta, const SurfaceFamilySpec& family);
Monomial substituted_key(const Monomial& beta, std::span<const Monomial> alphas);

/// The exponents of f whose substituted key is grlex-maximal, with their
/// coefficients and the leading coefficients c_i of the h_i.
struct LeadingSelection {
  Monomial key;
  std::vector<Monomial> exponents;  // beta^j, grlex-descending
  std::vector<FieldElem> coeffs;    // b_{beta^j}
  Point leading_coeffs;             // c = (c_{alpha^1}, ..., c_{alpha^(n-d)})
};

LeadingSelection leading_selection(const MultiPoly& f, const SurfaceFamilySpec& family);

/// P_gamma(rho) = sum_j b_j C(beta^j, gamma) c^(beta^j' - gamma') rho^(beta^j' - gamma'),
/// summed over the beta^j >= gamma; a polynomial in the n - d dilation
/// variables. gamma = 0 (the default) gives the leading coefficient of f on
/// the surfaces.
MultiPoly leading_coefficient_poly(const MultiPoly& f, const SurfaceFamilySpec& family,
                                   const std::optional<Monomial>& gamma = std::nullopt);

/// f_rho(t) = f(Gamma_rho(t)) as a polynomial in d variables.
MultiPoly restrict_to_surface(const MultiPoly& f, const SurfaceInstance& inst,
                              const PolyLimits& limits = {});

struct Check {
  std::string name;
  bool pass = false;
  std::optional<std::string> witness;
};

struct BoundReport {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint32_t ell = 0;
  std::optional<std::uint64_t> k;
  std::optional<BigInt> pm;  // absent for ell < 2
  Rational mm;
  std::optional<MmClaim> mm_claim;
  std::size_t set_size = 0;
  std::vector<Check> checks;

  bool passed() const;
};

struct VerifyOptions {
  InterpolationLimits interpolation;
  PolyLimits poly;
};

/// Thrown by the verify pipelines when the input fails validate_brk_set.
class InvalidSet : public Error {
 public:
  explicit InvalidSet(ValidationVerdict verdict);
  const ValidationVerdict& verdict() const noexcept { return verdict_; }

 private:
  ValidationVerdict verdict_;
};

/// |S| >= pm_bound, and no nonzero f of degree <= floor((q-1)/ell) vanishes
/// on S. Requires ell >= 2.
BoundReport verify_theorem_pm(const BrkSet& set, const VerifyOptions& options = {});

/// For D = k(q-1) - 1 and M = (ell+1)k - 2 ell k/q: |S| >= C(D+n,n)/C(M+n-1,n),
/// |S| >= mm_bound, and no nonzero f of degree <= D vanishes on S with
/// multiplicity M. Requires 1 <= ell < q and q | k.
BoundReport verify_theorem_mm(const BrkSet& set, std::uint64_t k, const VerifyOptions& options = {});

/// Step-by-step replay of the polynomial-method contradiction for a given or
/// interpolated witness f of degree <= floor((q-1)/ell). Works on sets that
/// fail validation; the recorded instances supply the surfaces.
struct PmDiagnosis {
  std::optional<MultiPoly> witness;
  std::optional<MultiPoly> leading_poly;  // P(rho)
  std::vector<Check> steps;
  std::string failing_step;  // first failing step; empty if every step held
};

PmDiagnosis diagnose_pm(const BrkSet& set, const std::optional<MultiPoly>& witness = std::nullopt,
                        const VerifyOptions& options = {});

}  // namespace brkfq

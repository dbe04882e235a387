#include "brk/theorem.hpp"

#include <algorithm>
#include <map>

namespace brkfq {

namespace {

BigInt big_binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

void require_prime(std::uint64_t q) {
  if (!is_prime(q)) throw DomainError("q = " + std::to_string(q) + " is not prime");
}

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string big_string(const BigInt& v) { return v.str(); }

void require_valid(const BrkSet& set) {
  auto verdict = validate_brk_set(set);
  if (!verdict.valid) throw InvalidSet(std::move(verdict));
}

BoundReport base_report(const BrkSet& set) {
  const auto& f = set.family;
  BoundReport r;
  r.q = f.spec.modulus();
  r.n = f.n;
  r.d = f.d;
  r.ell = f.ell;
  if (f.ell >= 2) r.pm = pm_bound(r.q, r.n, r.ell);
  r.mm = mm_bound(r.q, r.n, r.ell);
  r.set_size = set.points.size();
  r.checks.push_back({"valid_brk_set", true, std::nullopt});
  return r;
}

std::string interpolation_summary(const Interpolation& in) {
  return "rank " + std::to_string(in.rank) + " of " + std::to_string(in.unknowns) + " unknowns, " +
         std::to_string(in.rows_processed) + "/" + std::to_string(in.equations) +
         " equations processed";
}

}  // namespace

std::string rational_string(const Rational& r) {
  return big_string(boost::multiprecision::numerator(r)) + "/" +
         big_string(boost::multiprecision::denominator(r));
}

BigInt ceil(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt quot = num / den;  // truncates toward zero
  if (num % den != 0 && num > 0) quot += 1;
  return quot;
}

BigInt pm_bound(std::uint64_t q, std::uint64_t n, std::uint64_t ell) {
  require_prime(q);
  if (ell < 2) throw DomainError("pm_bound requires ell >= 2");
  if (n < 2) throw DomainError("pm_bound requires n >= 2");
  return big_binom((q - 1) / ell + n, n);
}

Rational mm_bound(std::uint64_t q, std::uint64_t n, std::uint64_t ell) {
  require_prime(q);
  if (ell < 1) throw DomainError("mm_bound requires ell >= 1");
  if (n < 1) throw DomainError("mm_bound requires n >= 1");
  // (q-1)^n / ((ell+1) - 2 ell/q)^n = ((q-1) q)^n / (q(ell+1) - 2 ell)^n
  BigInt num = boost::multiprecision::pow(BigInt(q - 1) * q, static_cast<unsigned>(n));
  BigInt den = boost::multiprecision::pow(BigInt(q) * (ell + 1) - 2 * BigInt(ell),
                                          static_cast<unsigned>(n));
  return Rational(num, den);
}

MmClaim mm_claim_bound(std::uint64_t q, std::uint64_t n, std::uint64_t ell, std::uint64_t k) {
  require_prime(q);
  if (k == 0 || k % q != 0) {
    throw DomainError("k = " + std::to_string(k) + " is not a positive multiple of q = " +
                      std::to_string(q));
  }
  if (ell < 1) throw DomainError("mm_claim_bound requires ell >= 1");
  if (n < 1) throw DomainError("mm_claim_bound requires n >= 1");
  MmClaim c;
  c.degree = k * (q - 1) - 1;
  c.multiplicity = (ell + 1) * k - 2 * ell * (k / q);
  c.ratio = Rational(big_binom(c.degree + n, n), big_binom(c.multiplicity + n - 1, n));
  return c;
}

std::vector<Monomial> leading_exponents(const SurfaceFamilySpec& family) {
  std::vector<Monomial> out;
  out.reserve(family.h.size());
  for (const auto& h : family.h) out.push_back(leading_monomial(h).monomial);
  return out;
}

Monomial substituted_key(const Monomial& beta, std::span<const Monomial> alphas) {
  if (alphas.empty()) throw ArityMismatch("substituted_key needs at least one alpha");
  const std::size_t d = alphas.front().arity();
  if (beta.arity() != d + alphas.size()) {
    throw ArityMismatch("substituted_key: beta of arity " + std::to_string(beta.arity()) +
                        ", expected " + std::to_string(d + alphas.size()));
  }
  Monomial key = beta.head(d);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i].arity() != d) throw ArityMismatch("substituted_key: ragged alphas");
    key = key + alphas[i].scaled(beta[d + i]);
  }
  return key;
}

Monomial substituted_key(const Monomial& beta, const SurfaceFamilySpec& family) {
  const auto alphas = leading_exponents(family);
  return substituted_key(beta, alphas);
}

LeadingSelection leading_selection(const MultiPoly& f, const SurfaceFamilySpec& family) {
  if (f.is_zero()) throw DomainError("leading selection of the zero polynomial");
  if (f.arity() != family.n) throw ArityMismatch("leading selection: f has the wrong arity");
  const auto alphas = leading_exponents(family);
  LeadingSelection sel;
  for (const auto& h : family.h) {
    auto c = leading_monomial(h).coeff;
    if (c.is_zero()) throw DomainError("leading coefficient of some h_i is zero");
    sel.leading_coeffs.push_back(c.value());
  }
  bool first = true;
  for (const auto& [beta, b] : f.terms()) {
    Monomial key = substituted_key(beta, alphas);
    auto cmp = first ? std::strong_ordering::greater : grlex_cmp(key, sel.key);
    if (cmp > 0) {
      sel.key = std::move(key);
      sel.exponents.clear();
      sel.coeffs.clear();
    }
    if (cmp >= 0) {
      sel.exponents.push_back(beta);
      sel.coeffs.push_back(f.spec().elem(b));
    }
    first = false;
  }
  return sel;
}

MultiPoly leading_coefficient_poly(const MultiPoly& f, const SurfaceFamilySpec& family,
                                   const std::optional<Monomial>& gamma) {
  const LeadingSelection sel = leading_selection(f, family);
  const FieldSpec& spec = f.spec();
  const std::size_t codim = family.codim();
  const Monomial g = gamma.value_or(Monomial(family.n));
  if (g.arity() != family.n) throw ArityMismatch("leading_coefficient_poly: gamma arity");
  MultiPoly p(spec, codim);
  for (std::size_t j = 0; j < sel.exponents.size(); ++j) {
    const Monomial& beta = sel.exponents[j];
    if (!g.divides(beta)) continue;
    std::uint32_t coeff = spec.mul(sel.coeffs[j].value(),
                                   multi_binom(beta.exponents(), g.exponents(), spec).value());
    const Monomial shift = beta.tail(codim) - g.tail(codim);
    for (std::size_t i = 0; i < codim; ++i) {
      coeff = spec.mul(coeff, spec.pow(sel.leading_coeffs[i], shift[i]));
    }
    p.add_term_raw(shift, coeff);
  }
  return p;
}

MultiPoly restrict_to_surface(const MultiPoly& f, const SurfaceInstance& inst,
                              const PolyLimits& limits) {
  if (inst.g.empty()) throw ArityMismatch("surface instance without defining polynomials");
  const std::size_t codim = inst.g.size();
  const std::size_t d = inst.g.front().arity();
  if (f.arity() != d + codim || inst.rho.size() != codim || inst.offset.size() != d + codim) {
    throw ArityMismatch("restrict_to_surface: dimensions disagree");
  }
  const FieldSpec& spec = f.spec();
  std::vector<MultiPoly> q;
  q.reserve(d + codim);
  for (std::size_t i = 0; i < d; ++i) {
    q.push_back(MultiPoly::variable(spec, d, i) + MultiPoly::constant(spec, d, inst.offset[i]));
  }
  std::int64_t ell = 1;
  for (std::size_t i = 0; i < codim; ++i) {
    ell = std::max(ell, inst.g[i].degree());
    q.push_back(inst.g[i].scaled(spec.elem(inst.rho[i])) +
                MultiPoly::constant(spec, d, inst.offset[d + i]));
  }
  MultiPoly r = compose(f, q, limits);
  if (!f.is_zero() && r.degree() > ell * f.degree()) {
    throw ConsistencyError("restriction degree exceeds ell * deg f");
  }
  return r;
}

bool BoundReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

InvalidSet::InvalidSet(ValidationVerdict verdict)
    : Error(std::string("set is not a valid BRK-type set (clause ") + to_string(verdict.clause) +
            "): " + verdict.message),
      verdict_(std::move(verdict)) {}

BoundReport verify_theorem_pm(const BrkSet& set, const VerifyOptions& options) {
  if (set.family.ell < 2) throw DomainError("the polynomial-method bound needs ell >= 2");
  require_valid(set);
  BoundReport r = base_report(set);
  const std::uint32_t degree = (r.q - 1) / r.ell;

  r.checks.push_back({"size_ge_pm_bound", BigInt(r.set_size) >= *r.pm,
                      "|S| = " + std::to_string(r.set_size) + ", bound = " + big_string(*r.pm)});

  Interpolation in = find_vanishing(set.family.spec, set.family.n, set.points, degree,
                                    options.interpolation);
  Check absent{"no_vanishing_poly_deg_le_" + std::to_string(degree), !in.witness.has_value(),
               interpolation_summary(in)};
  if (in.witness) *absent.witness += "; witness " + in.witness->to_string();
  r.checks.push_back(std::move(absent));
  return r;
}

BoundReport verify_theorem_mm(const BrkSet& set, std::uint64_t k, const VerifyOptions& options) {
  const auto& family = set.family;
  const std::uint32_t q = family.spec.modulus();
  if (family.ell < 1 || family.ell >= q) {
    throw DomainError("the multiplicity bound pipeline needs 1 <= ell < q");
  }
  MmClaim claim = mm_claim_bound(q, family.n, family.ell, k);
  require_valid(set);
  BoundReport r = base_report(set);
  r.k = k;
  r.mm_claim = claim;

  r.checks.push_back({"size_ge_mm_claim_bound", Rational(r.set_size) >= claim.ratio,
                      "|S| = " + std::to_string(r.set_size) + ", ceil(" +
                          rational_string(claim.ratio) + ") = " + big_string(ceil(claim.ratio))});
  r.checks.push_back({"size_ge_mm_bound", Rational(r.set_size) >= r.mm,
                      "|S| = " + std::to_string(r.set_size) + ", bound = " + rational_string(r.mm)});

  // ell (D - w) < (M - w) q for all 0 <= w < k.
  bool ineq = true;
  std::string ineq_witness = "holds for all w < k";
  for (std::uint64_t w = 0; w < k; ++w) {
    BigInt lhs = BigInt(family.ell) * (BigInt(claim.degree) - w);
    BigInt rhs = (BigInt(claim.multiplicity) - w) * q;
    if (!(lhs < rhs)) {
      ineq = false;
      ineq_witness = "fails at w = " + std::to_string(w);
      break;
    }
  }
  r.checks.push_back({"degree_multiplicity_inequality", ineq, ineq_witness});

  if (claim.degree > Monomial::kMaxExponent || claim.multiplicity > Monomial::kMaxExponent) {
    throw CapExceeded("D or M exceeds the exponent cap");
  }
  Interpolation in = find_vanishing_mult(family.spec, family.n, set.points,
                                         static_cast<std::uint32_t>(claim.degree),
                                         static_cast<std::uint32_t>(claim.multiplicity),
                                         options.interpolation);
  Check absent{"no_vanishing_poly_deg_le_" + std::to_string(claim.degree) + "_mult_" +
                   std::to_string(claim.multiplicity),
               !in.witness.has_value(), interpolation_summary(in)};
  if (in.witness) *absent.witness += "; witness " + in.witness->to_string();
  r.checks.push_back(std::move(absent));
  return r;
}

PmDiagnosis diagnose_pm(const BrkSet& set, const std::optional<MultiPoly>& witness,
                        const VerifyOptions& options) {
  const auto& family = set.family;
  if (auto problem = family_problem(family)) throw DomainError("invalid family: " + *problem);
  if (family.ell < 2) throw DomainError("the polynomial-method bound needs ell >= 2");
  const FieldSpec& spec = family.spec;
  const std::uint32_t q = spec.modulus();
  const std::uint32_t degree = (q - 1) / family.ell;

  PmDiagnosis dx;
  auto step = [&](std::string name, bool pass, std::string detail) {
    if (!pass && dx.failing_step.empty()) dx.failing_step = name;
    dx.steps.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  };

  if (witness) {
    dx.witness = witness;
  } else {
    dx.witness = find_vanishing(spec, family.n, set.points, degree, options.interpolation).witness;
  }
  if (!step("witness_exists", dx.witness.has_value() && !dx.witness->is_zero(),
            dx.witness ? dx.witness->to_string() : "no nonzero polynomial of degree <= " +
                                                         std::to_string(degree) + " vanishes on S")) {
    return dx;
  }
  const MultiPoly& f = *dx.witness;
  if (f.arity() != family.n || !(f.spec() == spec)) {
    throw ArityMismatch("diagnose_pm: witness does not match the family");
  }
  step("witness_degree_le_" + std::to_string(degree), f.degree() <= degree,
       "deg f = " + std::to_string(f.degree()));

  std::string miss = "vanishes at all " + std::to_string(set.points.size()) + " points";
  bool vanishes = true;
  for (const auto& p : set.points) {
    if (!f.evaluate(p).is_zero()) {
      vanishes = false;
      miss = "f" + point_string(p) + " != 0";
      break;
    }
  }
  step("witness_vanishes_on_set", vanishes, miss);

  std::map<Point, const SurfaceInstance*> by_rho;
  for (const auto& inst : set.instances) by_rho.emplace(inst.rho, &inst);
  const auto nonzero = field_values(spec, true);
  std::string restr = "f_rho = 0 for every rho in (F_q*)^(n-d)";
  bool restr_ok = true;
  for_each_point(nonzero, family.codim(), [&](const Point& rho) {
    if (!restr_ok) return;
    auto it = by_rho.find(rho);
    if (it == by_rho.end()) {
      restr_ok = false;
      restr = "no surface recorded for rho " + point_string(rho);
      return;
    }
    MultiPoly fr = restrict_to_surface(f, *it->second, options.poly);
    if (!fr.is_zero()) {
      restr_ok = false;
      restr = "f_rho = " + fr.to_string("t") + " at rho " + point_string(rho);
    }
  });
  step("restrictions_vanish", restr_ok, restr);

  dx.leading_poly = leading_coefficient_poly(f, family);
  const MultiPoly& lead = *dx.leading_poly;
  std::uint64_t zeros = 0;
  std::uint64_t total = 0;
  std::optional<Point> nonvanishing;
  for_each_point(nonzero, family.codim(), [&](const Point& rho) {
    ++total;
    if (lead.evaluate(rho).is_zero()) {
      ++zeros;
    } else if (!nonvanishing) {
      nonvanishing = rho;
    }
  });
  step("leading_coefficient_vanishes", !nonvanishing,
       nonvanishing ? "P" + point_string(*nonvanishing) + " != 0, P = " + lead.to_string("r")
                    : "P(rho) = 0 on all " + std::to_string(total) + " dilations");
  step("leading_coefficient_nonzero", !lead.is_zero(), "P = " + lead.to_string("r"));

  // Schwartz-Zippel over A = F_q*: zeros <= deg P (q-1)^(n-d-1) < (q-1)^(n-d).
  std::uint64_t bound = 0;
  if (!lead.is_zero()) {
    bound = static_cast<std::uint64_t>(lead.degree());
    for (std::size_t i = 0; i + 1 < family.codim(); ++i) bound *= q - 1;
  }
  step("zero_count_within_sz_bound", !lead.is_zero() && zeros <= bound,
       std::to_string(zeros) + " zeros on (F_q*)^(n-d), bound " + std::to_string(bound));
  return dx;
}

}  // namespace brkfq

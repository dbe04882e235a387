#include "brk/vanish.hpp"

#include <string>

#include "brk/errors.hpp"
#include "brk/linsolve.hpp"

namespace brkfq {

namespace {

// C(n, k) saturated at cap + 1.
std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

void check_points(const FieldSpec& spec, std::size_t arity, std::span<const Point> points) {
  if (arity == 0) throw ArityMismatch("interpolation needs at least one variable");
  for (const auto& p : points) {
    if (p.size() != arity) {
      throw ArityMismatch("point of arity " + std::to_string(p.size()) + ", expected " +
                          std::to_string(arity));
    }
    for (auto v : p) {
      if (v >= spec.modulus()) throw DomainError("point coordinate outside F_q");
    }
  }
}

// Row of the constraint f^(beta)(a) = 0 over the monomial basis:
// entry(alpha) = C(alpha, beta) a^(alpha - beta), with 0^0 = 1.
void constraint_row(const FieldSpec& spec, const MonomialBasis& basis, const Point& a,
                    const Monomial& beta, std::vector<std::uint32_t>& row) {
  const std::size_t n = basis.arity;
  const std::uint32_t dmax = basis.max_degree;
  // coord[i][e] = C(e, beta_i) * a_i^(e - beta_i) for e >= beta_i.
  std::vector<std::vector<std::uint32_t>> coord(n, std::vector<std::uint32_t>(dmax + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t power = 1;
    for (std::uint32_t e = beta[i]; e <= dmax; ++e) {
      coord[i][e] = spec.mul(spec.binom(e, beta[i]), power);
      power = spec.mul(power, a[i]);
    }
  }
  row.assign(basis.monomials.size(), 0);
  for (std::size_t c = 0; c < basis.monomials.size(); ++c) {
    const Monomial& alpha = basis.monomials[c];
    std::uint32_t v = 1;
    for (std::size_t i = 0; i < n && v != 0; ++i) v = spec.mul(v, coord[i][alpha[i]]);
    row[c] = v;
  }
}

MultiPoly vector_to_poly(const FieldSpec& spec, const MonomialBasis& basis,
                         const std::vector<std::uint32_t>& v) {
  MultiPoly f(spec, basis.arity);
  for (std::size_t c = 0; c < v.size(); ++c) f.add_term_raw(basis.monomials[c], v[c]);
  return f;
}

Interpolation solve(const FieldSpec& spec, std::size_t arity, std::span<const Point> points,
                    std::uint32_t max_degree, std::uint32_t mult,
                    const InterpolationLimits& limits) {
  check_points(spec, arity, points);
  if (mult == 0) throw DomainError("multiplicity must be at least 1");
  MonomialBasis basis = monomials_up_to(max_degree, arity, limits);

  const std::uint64_t per_point = binom_capped(mult + arity - 1, arity, limits.max_matrix_entries);
  Interpolation out;
  out.unknowns = basis.monomials.size();
  out.equations = per_point * points.size();
  if (per_point > limits.max_matrix_entries ||
      (out.equations != 0 && out.unknowns > limits.max_matrix_entries / out.equations)) {
    throw CapExceeded("constraint system " + std::to_string(out.equations) + "x" +
                      std::to_string(out.unknowns) + " exceeds the matrix cap " +
                      std::to_string(limits.max_matrix_entries));
  }

  std::vector<std::vector<Monomial>> shells;
  for (std::uint32_t s = 0; s < mult; ++s) shells.push_back(monomials_of_degree(arity, s));

  RowReducer reducer(spec, out.unknowns);
  std::vector<std::uint32_t> row;
  for (const auto& a : points) {
    for (const auto& shell : shells) {
      for (const auto& beta : shell) {
        if (reducer.full_rank()) break;
        constraint_row(spec, basis, a, beta, row);
        reducer.add_row(row);
        ++out.rows_processed;
      }
    }
    if (reducer.full_rank()) break;
  }
  out.rank = reducer.rank();
  if (reducer.full_rank()) return out;

  MultiPoly f = vector_to_poly(spec, basis, reducer.first_null_vector());
  // Re-verify through the polynomial path, never through the matrix.
  if (f.is_zero() || f.degree() > static_cast<std::int64_t>(max_degree)) {
    throw ConsistencyError("interpolation produced an out-of-range witness");
  }
  for (const auto& a : points) {
    bool ok = mult == 1 ? f.evaluate(a).is_zero() : multiplicity(f, a) >= mult;
    if (!ok) throw ConsistencyError("interpolation witness fails at a constraint point");
  }
  out.witness = std::move(f);
  return out;
}

}  // namespace

MonomialBasis monomials_up_to(std::uint32_t max_degree, std::size_t arity,
                              const InterpolationLimits& limits) {
  if (arity == 0) throw ArityMismatch("monomial basis needs at least one variable");
  if (max_degree > Monomial::kMaxExponent) {
    throw CapExceeded("degree " + std::to_string(max_degree) + " exceeds the exponent cap");
  }
  const std::uint64_t size = binom_capped(max_degree + arity, arity, limits.max_basis);
  if (size > limits.max_basis) {
    throw CapExceeded("monomial basis of degree " + std::to_string(max_degree) + " in " +
                      std::to_string(arity) + " variables exceeds the cap " +
                      std::to_string(limits.max_basis));
  }
  MonomialBasis basis;
  basis.arity = arity;
  basis.max_degree = max_degree;
  basis.monomials.reserve(size);
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    for (auto& m : monomials_of_degree(arity, d)) basis.monomials.push_back(std::move(m));
  }
  return basis;
}

Interpolation find_vanishing(const FieldSpec& spec, std::size_t arity,
                             std::span<const Point> points, std::uint32_t max_degree,
                             const InterpolationLimits& limits) {
  return solve(spec, arity, points, max_degree, 1, limits);
}

Interpolation find_vanishing_mult(const FieldSpec& spec, std::size_t arity,
                                  std::span<const Point> points, std::uint32_t max_degree,
                                  std::uint32_t mult, const InterpolationLimits& limits) {
  return solve(spec, arity, points, max_degree, mult, limits);
}

}  // namespace brkfq

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brk/field.hpp"
#include "brk/monomial.hpp"

namespace brkfq {

/// A point of F_q^m as canonical residues.
using Point = std::vector<std::uint32_t>;

struct PolyLimits {
  std::size_t max_terms = 1'000'000;       // composition / expansion blowup guard
  std::uint64_t census_points = 1'000'000;  // |A|^m in zero_census
};

/// Sparse polynomial over F_q in a fixed number of variables.
///
/// Terms live in a map ordered grlex-descending, so iteration starts at the
/// leading term. Zero coefficients are never stored: the zero polynomial is
/// exactly the empty map.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, std::uint32_t, GrlexGreater>;

  MultiPoly(FieldSpec spec, std::size_t arity) : spec_(std::move(spec)), arity_(arity) {}

  static MultiPoly constant(const FieldSpec& spec, std::size_t arity, std::int64_t c);
  static MultiPoly variable(const FieldSpec& spec, std::size_t arity, std::size_t var);
  static MultiPoly term(const FieldSpec& spec, const Monomial& m, std::int64_t c);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Maximum total degree over stored terms; -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  const TermMap& terms() const noexcept { return terms_; }

  FieldElem coeff(const Monomial& m) const;
  /// Adds c*x^m to the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, FieldElem c);
  void add_term_raw(const Monomial& m, std::uint32_t c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(FieldElem c) const;
  MultiPoly pow(std::uint32_t e) const;

  FieldElem evaluate(std::span<const std::uint32_t> point) const;

  /// The sum of the terms of total degree exactly `deg`.
  MultiPoly homogeneous_part(std::uint64_t deg) const;
  /// Nonzero with every term of total degree `deg`.
  bool is_homogeneous_of_degree(std::uint64_t deg) const;

  std::string to_string(const std::string& var_prefix = "x") const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.spec_ == b.spec_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiPoly& o, const char* what) const;
  void check_arity(const Monomial& m) const;

  FieldSpec spec_;
  std::size_t arity_;
  TermMap terms_;
};

struct LeadingTerm {
  Monomial monomial;
  FieldElem coeff;
};

/// Grlex-maximal term. Throws DomainError on the zero polynomial.
LeadingTerm leading_monomial(const MultiPoly& f);

/// f(Q_1(y), ..., Q_m(y)). Throws CapExceeded if an intermediate power or
/// the result exceeds limits.max_terms.
MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> q, const PolyLimits& limits = {});

/// Hasse derivative via the closed form sum_alpha c_alpha C(alpha,beta) x^(alpha-beta).
MultiPoly hasse_derivative(const MultiPoly& f, const Monomial& beta);

/// f^(beta)(a) without materialising the derivative.
FieldElem hasse_derivative_at(const MultiPoly& f, const Monomial& beta,
                              std::span<const std::uint32_t> point);

/// Coefficient of y^beta in f(x + y), obtained by expanding in 2m variables.
/// Only meant as an independent check on hasse_derivative.
MultiPoly hasse_shift_oracle(const MultiPoly& f, const Monomial& beta,
                             const PolyLimits& limits = {});

inline constexpr std::uint32_t kInfiniteMultiplicity = std::numeric_limits<std::uint32_t>::max();

/// Largest M with f^(beta)(a) = 0 for all |beta| < M, found by scanning the
/// shells |beta| = 0, 1, ... Returns kInfiniteMultiplicity for f = 0.
std::uint32_t multiplicity(const MultiPoly& f, std::span<const std::uint32_t> point);

struct ZeroCensus {
  std::uint64_t zeros = 0;     // |{a in A^m : f(a) = 0}|
  std::uint64_t weighted = 0;  // sum over A^m of mult(f, a)
  std::uint64_t bound = 0;     // deg f * |A|^(m-1)
};

/// Exhaustive zero count of a nonzero f over A^m, with both Schwartz-Zippel
/// inequalities checked (ConsistencyError if either fails).
ZeroCensus zero_census(const MultiPoly& f, std::span<const std::uint32_t> subset,
                       const PolyLimits& limits = {});

/// Calls fn(point) for every point of A^dim in lexicographic order (first
/// coordinate most significant). dim = 0 yields one empty point.
template <typename Fn>
void for_each_point(std::span<const std::uint32_t> values, std::size_t dim, Fn&& fn) {
  if (values.empty() && dim > 0) return;
  std::vector<std::size_t> idx(dim, 0);
  Point p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = values[0];
  while (true) {
    fn(static_cast<const Point&>(p));
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (++idx[i] < values.size()) {
        p[i] = values[idx[i]];
        break;
      }
      idx[i] = 0;
      p[i] = values[0];
      if (i == 0) return;
    }
    if (dim == 0) return;
  }
}

/// The residues 0..q-1, or 1..q-1 when nonzero_only.
std::vector<std::uint32_t> field_values(const FieldSpec& spec, bool nonzero_only = false);

}  // namespace brkfq

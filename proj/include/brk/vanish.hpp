#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "brk/multipoly.hpp"

namespace brkfq {

struct InterpolationLimits {
  std::uint64_t max_basis = 1'000'000;          // C(D+n, n)
  std::uint64_t max_matrix_entries = 100'000'000;  // equations x unknowns
};

/// Every monomial in `arity` variables of total degree <= max_degree,
/// grlex-ascending. Its size is C(max_degree + arity, arity).
struct MonomialBasis {
  std::size_t arity = 0;
  std::uint32_t max_degree = 0;
  std::vector<Monomial> monomials;
};

MonomialBasis monomials_up_to(std::uint32_t max_degree, std::size_t arity,
                              const InterpolationLimits& limits = {});

/// Outcome of an interpolation problem. `witness` is the polynomial whose
/// coefficient vector is the basis vector of the smallest free column of the
/// constraint system (columns = grlex-ascending monomials).
struct Interpolation {
  std::optional<MultiPoly> witness;
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  std::uint64_t equations = 0;
  std::uint64_t rows_processed = 0;  // elimination stops early at full rank
};

/// Nonzero f with deg f <= max_degree and f(s) = 0 on every point, if one
/// exists. Guaranteed to exist when |points| < C(max_degree + n, n).
Interpolation find_vanishing(const FieldSpec& spec, std::size_t arity,
                             std::span<const Point> points, std::uint32_t max_degree,
                             const InterpolationLimits& limits = {});

/// Nonzero f with deg f <= max_degree and mult(f, s) >= mult for every point.
/// Each point contributes one equation per |beta| < mult: the Hasse
/// derivative f^(beta)(s) = 0. Guaranteed when
/// C(mult + n - 1, n) |points| < C(max_degree + n, n).
Interpolation find_vanishing_mult(const FieldSpec& spec, std::size_t arity,
                                  std::span<const Point> points, std::uint32_t max_degree,
                                  std::uint32_t mult, const InterpolationLimits& limits = {});

}  // namespace brkfq

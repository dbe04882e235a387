#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brk/multipoly.hpp"

namespace brkfq {

/// Family data of an (n,d)-BRK-type set of degree ell: n - d homogeneous
/// polynomials h_i of degree ell in d variables.
struct SurfaceFamilySpec {
  FieldSpec spec;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint32_t ell = 0;
  std::vector<MultiPoly> h;

  std::size_t codim() const noexcept { return n - d; }
};

/// Structural problems (dimensions, arities, fields, homogeneity) or nullopt.
std::optional<std::string> family_problem(const SurfaceFamilySpec& family);

/// One surface Lambda_rho = { a_rho + (t, rho_1 g_1(t), ..., rho_{n-d} g_{n-d}(t)) }.
struct SurfaceInstance {
  Point rho;     // length n - d
  Point offset;  // a_rho, length n
  std::vector<MultiPoly> g;
};

/// Records one (instance, t) whose surface point produced a set element.
struct Provenance {
  std::size_t instance = 0;
  Point t;
};

struct BrkSet {
  SurfaceFamilySpec family;
  std::vector<SurfaceInstance> instances;  // rho in lexicographic order
  std::vector<Point> points;               // sorted, deduplicated
  std::vector<Provenance> provenance;      // parallel to points; empty when loaded from file
};

enum class Strategy { canonical, random };

struct BuildLimits {
  std::uint64_t max_points = 10'000'000;  // q^n
};

/// Gamma_rho(t) = a_rho + (t, rho_1 g_1(t), ..., rho_{n-d} g_{n-d}(t)).
Point gamma_eval(const SurfaceInstance& inst, std::span<const std::uint32_t> t);

/// One instance per rho in F_q^(n-d). Canonical: a_rho = 0, g_{rho,i} = h_i.
/// Random (seeded): a_rho uniform in F_q^n, then for each i the coefficients
/// of a uniform polynomial of degree <= ell - 1 (monomials grlex-ascending)
/// are added to h_i. Draw order is rho-major, then a_rho, then i, then
/// monomial.
BrkSet build_brk_set(const SurfaceFamilySpec& family, Strategy strategy, std::uint64_t seed,
                     const BuildLimits& limits = {});

enum class ValidationClause {
  none,
  family,       // structural: dimensions, arities, fields
  homogeneity,  // some h_i is not homogeneous of degree ell
  top_part,     // some g_{rho,i} is not in P_{h_i}
  coverage,     // instances do not cover F_q^(n-d) exactly once
  containment,  // some Gamma_rho(t) is missing from the set
};

const char* to_string(ValidationClause clause);

struct ValidationVerdict {
  bool valid = true;
  ValidationClause clause = ValidationClause::none;
  std::string message;
  std::optional<std::size_t> poly_index;  // h_i or g_{rho,i}
  std::optional<Point> rho;
  std::optional<Point> t;
  std::optional<Point> missing_point;
};

/// Checks the family, each g_{rho,i} in P_{h_i}, coverage of every rho, and
/// Lambda_rho inside `points`, reporting the first violation.
ValidationVerdict validate_brk_set(std::span<const Point> points, const SurfaceFamilySpec& family,
                                   std::span<const SurfaceInstance> instances);
ValidationVerdict validate_brk_set(const BrkSet& set);

/// Surfaces of the older single-dilation definition, where rho multiplies the
/// whole tuple: Lambda_rho = { a + rho (lambda, g_rho(lambda)) : lambda in F_q^(n-1) }.
struct TrainorInstance {
  std::uint32_t rho = 0;
  Point offset;  // length n
  MultiPoly g;
};

struct TrainorSet {
  FieldSpec spec;
  std::size_t n = 0;
  std::uint32_t ell = 0;
  MultiPoly g;  // in n - 1 variables, degree ell >= 2
  std::vector<TrainorInstance> instances;
  std::vector<Point> points;
};

Point trainor_eval(const TrainorInstance& inst, std::span<const std::uint32_t> lambda);

/// Canonical: a = 0, g_rho = g. Random: a uniform, g_rho = g plus a uniform
/// polynomial of degree <= ell - 1, same draw order as build_brk_set.
TrainorSet build_trainor_set(const MultiPoly& g, Strategy strategy, std::uint64_t seed,
                             const BuildLimits& limits = {});

/// Clauses: top_part (deg g_rho = ell and same top part as g), coverage,
/// containment.
ValidationVerdict validate_trainor_set(const TrainorSet& set);

}  // namespace brkfq

#include "brk/brkset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "brk/errors.hpp"
#include "brk/random.hpp"

namespace brkfq {

namespace {

std::uint64_t checked_space_size(std::uint32_t q, std::size_t n, const BuildLimits& limits) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > limits.max_points) {
      throw CapExceeded("q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                        " exceeds the enumeration cap " + std::to_string(limits.max_points));
    }
  }
  return total;
}

// Uniform polynomial of degree <= max_degree in `arity` variables: one draw
// per monomial, grlex-ascending.
MultiPoly random_lower_part(const FieldSpec& spec, std::size_t arity, std::uint32_t max_degree,
                            Rng& rng) {
  MultiPoly p(spec, arity);
  for (std::uint32_t deg = 0; deg <= max_degree; ++deg) {
    for (const auto& m : monomials_of_degree(arity, deg)) {
      p.add_term_raw(m, static_cast<std::uint32_t>(rng.below(spec.modulus())));
    }
  }
  return p;
}

Point random_point(std::uint32_t q, std::size_t n, Rng& rng) {
  Point p(n);
  for (auto& v : p) v = static_cast<std::uint32_t>(rng.below(q));
  return p;
}

bool in_sorted(const std::vector<Point>& sorted, const Point& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

ValidationVerdict fail(ValidationClause clause, std::string message) {
  ValidationVerdict v;
  v.valid = false;
  v.clause = clause;
  v.message = std::move(message);
  return v;
}

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

bool in_top_part_class(const MultiPoly& g, const MultiPoly& top, std::uint32_t ell) {
  return g.degree() == static_cast<std::int64_t>(ell) && g.homogeneous_part(ell) == top;
}

}  // namespace

std::optional<std::string> family_problem(const SurfaceFamilySpec& f) {
  if (f.d < 1 || f.d + 1 > f.n) {
    return "need 1 <= d <= n-1, got n=" + std::to_string(f.n) + ", d=" + std::to_string(f.d);
  }
  if (f.ell < 1) return std::string("degree ell must be at least 1");
  if (f.h.size() != f.codim()) {
    return "expected " + std::to_string(f.codim()) + " polynomials h_i, got " +
           std::to_string(f.h.size());
  }
  for (std::size_t i = 0; i < f.h.size(); ++i) {
    if (f.h[i].arity() != f.d) return "h_" + std::to_string(i + 1) + " has the wrong arity";
    if (!(f.h[i].spec() == f.spec)) return "h_" + std::to_string(i + 1) + " is over another field";
  }
  return std::nullopt;
}

Point gamma_eval(const SurfaceInstance& inst, std::span<const std::uint32_t> t) {
  if (inst.g.empty()) throw ArityMismatch("surface instance without defining polynomials");
  const FieldSpec& spec = inst.g.front().spec();
  const std::size_t d = t.size();
  const std::size_t codim = inst.g.size();
  if (inst.rho.size() != codim || inst.offset.size() != d + codim) {
    throw ArityMismatch("surface instance has inconsistent dimensions");
  }
  Point out(d + codim);
  for (std::size_t i = 0; i < d; ++i) out[i] = spec.add(inst.offset[i], t[i]);
  for (std::size_t i = 0; i < codim; ++i) {
    const auto gi = inst.g[i].evaluate(t).value();
    out[d + i] = spec.add(inst.offset[d + i], spec.mul(inst.rho[i], gi));
  }
  return out;
}

BrkSet build_brk_set(const SurfaceFamilySpec& family, Strategy strategy, std::uint64_t seed,
                     const BuildLimits& limits) {
  if (auto problem = family_problem(family)) throw DomainError("invalid family: " + *problem);
  for (std::size_t i = 0; i < family.h.size(); ++i) {
    if (!family.h[i].is_homogeneous_of_degree(family.ell)) {
      throw DomainError("h_" + std::to_string(i + 1) + " is not homogeneous of degree " +
                        std::to_string(family.ell));
    }
  }
  const FieldSpec& spec = family.spec;
  const std::uint32_t q = spec.modulus();
  checked_space_size(q, family.n, limits);

  BrkSet set{family, {}, {}, {}};
  Rng rng(seed);
  const auto values = field_values(spec);
  for_each_point(values, family.codim(), [&](const Point& rho) {
    SurfaceInstance inst{rho, Point(family.n, 0), family.h};
    if (strategy == Strategy::random) {
      inst.offset = random_point(q, family.n, rng);
      for (auto& gi : inst.g) gi = gi + random_lower_part(spec, family.d, family.ell - 1, rng);
    }
    set.instances.push_back(std::move(inst));
  });

  std::map<Point, Provenance> seen;
  for (std::size_t k = 0; k < set.instances.size(); ++k) {
    for_each_point(values, family.d, [&](const Point& t) {
      seen.try_emplace(gamma_eval(set.instances[k], t), Provenance{k, t});
    });
  }
  set.points.reserve(seen.size());
  set.provenance.reserve(seen.size());
  for (auto& [p, prov] : seen) {
    set.points.push_back(p);
    set.provenance.push_back(std::move(prov));
  }
  return set;
}

const char* to_string(ValidationClause clause) {
  switch (clause) {
    case ValidationClause::none: return "none";
    case ValidationClause::family: return "family";
    case ValidationClause::homogeneity: return "homogeneity";
    case ValidationClause::top_part: return "top_part";
    case ValidationClause::coverage: return "coverage";
    case ValidationClause::containment: return "containment";
  }
  return "unknown";
}

ValidationVerdict validate_brk_set(std::span<const Point> points, const SurfaceFamilySpec& family,
                                   std::span<const SurfaceInstance> instances) {
  if (auto problem = family_problem(family)) return fail(ValidationClause::family, *problem);
  const FieldSpec& spec = family.spec;
  const std::uint32_t q = spec.modulus();

  for (std::size_t i = 0; i < family.h.size(); ++i) {
    if (!family.h[i].is_homogeneous_of_degree(family.ell)) {
      auto v = fail(ValidationClause::homogeneity,
                    "h_" + std::to_string(i + 1) + " = " + family.h[i].to_string("t") +
                        " is not homogeneous of degree " + std::to_string(family.ell));
      v.poly_index = i;
      return v;
    }
  }

  for (const auto& inst : instances) {
    if (inst.g.size() != family.codim() || inst.rho.size() != family.codim() ||
        inst.offset.size() != family.n) {
      auto v = fail(ValidationClause::family, "instance has inconsistent dimensions");
      v.rho = inst.rho;
      return v;
    }
    for (std::size_t i = 0; i < inst.g.size(); ++i) {
      const MultiPoly& g = inst.g[i];
      bool ok = g.arity() == family.d && g.spec() == spec &&
                in_top_part_class(g, family.h[i], family.ell);
      if (!ok) {
        auto v = fail(ValidationClause::top_part,
                      "g_{rho," + std::to_string(i + 1) + "} = " + g.to_string("t") +
                          " does not have top part h_" + std::to_string(i + 1) + " at rho " +
                          point_string(inst.rho));
        v.poly_index = i;
        v.rho = inst.rho;
        return v;
      }
    }
    for (auto x : inst.rho) {
      if (x >= q) return fail(ValidationClause::coverage, "rho coordinate outside F_q");
    }
  }

  std::set<Point> rhos;
  for (const auto& inst : instances) {
    if (!rhos.insert(inst.rho).second) {
      auto v = fail(ValidationClause::coverage, "rho " + point_string(inst.rho) + " appears twice");
      v.rho = inst.rho;
      return v;
    }
  }
  const auto values = field_values(spec);
  std::optional<Point> uncovered;
  for_each_point(values, family.codim(), [&](const Point& rho) {
    if (!uncovered && !rhos.count(rho)) uncovered = rho;
  });
  if (uncovered) {
    auto v = fail(ValidationClause::coverage, "no surface for rho " + point_string(*uncovered));
    v.rho = uncovered;
    return v;
  }

  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& inst : instances) {
    std::optional<ValidationVerdict> missing;
    for_each_point(values, family.d, [&](const Point& t) {
      if (missing) return;
      Point p = gamma_eval(inst, t);
      if (!in_sorted(sorted, p)) {
        auto v = fail(ValidationClause::containment,
                      "Gamma_rho(t) = " + point_string(p) + " missing for rho " +
                          point_string(inst.rho) + ", t " + point_string(t));
        v.rho = inst.rho;
        v.t = t;
        v.missing_point = p;
        missing = std::move(v);
      }
    });
    if (missing) return *missing;
  }
  return {};
}

ValidationVerdict validate_brk_set(const BrkSet& set) {
  return validate_brk_set(set.points, set.family, set.instances);
}

Point trainor_eval(const TrainorInstance& inst, std::span<const std::uint32_t> lambda) {
  const FieldSpec& spec = inst.g.spec();
  const std::size_t n = lambda.size() + 1;
  if (inst.offset.size() != n || inst.g.arity() != lambda.size()) {
    throw ArityMismatch("Trainor instance has inconsistent dimensions");
  }
  Point out(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] = spec.add(inst.offset[i], spec.mul(inst.rho, lambda[i]));
  }
  out[n - 1] = spec.add(inst.offset[n - 1], spec.mul(inst.rho, inst.g.evaluate(lambda).value()));
  return out;
}

TrainorSet build_trainor_set(const MultiPoly& g, Strategy strategy, std::uint64_t seed,
                             const BuildLimits& limits) {
  if (g.arity() < 1) throw ArityMismatch("Trainor polynomial needs at least one variable");
  if (g.degree() < 2) throw DomainError("Trainor sets need deg g >= 2");
  const FieldSpec& spec = g.spec();
  const std::uint32_t q = spec.modulus();
  const std::size_t n = g.arity() + 1;
  checked_space_size(q, n, limits);
  const auto ell = static_cast<std::uint32_t>(g.degree());

  TrainorSet set{spec, n, ell, g, {}, {}};
  Rng rng(seed);
  for (std::uint32_t rho = 0; rho < q; ++rho) {
    TrainorInstance inst{rho, Point(n, 0), g};
    if (strategy == Strategy::random) {
      inst.offset = random_point(q, n, rng);
      inst.g = g + random_lower_part(spec, g.arity(), ell - 1, rng);
    }
    set.instances.push_back(std::move(inst));
  }
  std::set<Point> pts;
  const auto values = field_values(spec);
  for (const auto& inst : set.instances) {
    for_each_point(values, n - 1, [&](const Point& lambda) { pts.insert(trainor_eval(inst, lambda)); });
  }
  set.points.assign(pts.begin(), pts.end());
  return set;
}

ValidationVerdict validate_trainor_set(const TrainorSet& set) {
  const MultiPoly top = set.g.homogeneous_part(set.ell);
  if (set.g.arity() + 1 != set.n || set.g.degree() != static_cast<std::int64_t>(set.ell) ||
      set.ell < 2) {
    return fail(ValidationClause::family, "Trainor polynomial inconsistent with n and ell");
  }
  std::set<std::uint32_t> rhos;
  for (const auto& inst : set.instances) {
    if (inst.g.arity() != set.g.arity() || !(inst.g.spec() == set.spec) ||
        !in_top_part_class(inst.g, top, set.ell)) {
      auto v = fail(ValidationClause::top_part,
                    "g_rho = " + inst.g.to_string("l") + " does not share the top part of g");
      v.poly_index = 0;
      v.rho = Point{inst.rho};
      return v;
    }
    if (inst.offset.size() != set.n) {
      return fail(ValidationClause::family, "instance offset has the wrong length");
    }
    if (inst.rho >= set.spec.modulus() || !rhos.insert(inst.rho).second) {
      auto v = fail(ValidationClause::coverage, "rho " + std::to_string(inst.rho) +
                                                    " is out of range or repeated");
      v.rho = Point{inst.rho};
      return v;
    }
  }
  if (rhos.size() != set.spec.modulus()) {
    for (std::uint32_t r = 0; r < set.spec.modulus(); ++r) {
      if (!rhos.count(r)) {
        auto v = fail(ValidationClause::coverage, "no surface for rho " + std::to_string(r));
        v.rho = Point{r};
        return v;
      }
    }
  }
  std::vector<Point> sorted(set.points);
  std::sort(sorted.begin(), sorted.end());
  const auto values = field_values(set.spec);
  for (const auto& inst : set.instances) {
    std::optional<ValidationVerdict> missing;
    for_each_point(values, set.n - 1, [&](const Point& lambda) {
      if (missing) return;
      Point p = trainor_eval(inst, lambda);
      if (!in_sorted(sorted, p)) {
        auto v = fail(ValidationClause::containment,
                      "point " + point_string(p) + " missing for rho " + std::to_string(inst.rho));
        v.rho = Point{inst.rho};
        v.t = lambda;
        v.missing_point = p;
        missing = std::move(v);
      }
    });
    if (missing) return *missing;
  }
  return {};
}

}  // namespace brkfq

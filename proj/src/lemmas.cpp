#include "brk/lemmas.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "brk/errors.hpp"
#include "brk/theorem.hpp"
#include "brk/vanish.hpp"

namespace brkfq {

namespace gen {

Monomial monomial(std::size_t arity, std::uint32_t max_degree, Rng& rng) {
  std::vector<std::uint32_t> e(arity, 0);
  if (arity == 0) return Monomial(std::move(e));
  auto deg = static_cast<std::uint32_t>(rng.below(max_degree + 1));
  for (std::uint32_t i = 0; i < deg; ++i) ++e[rng.below(arity)];
  return Monomial(std::move(e));
}

MultiPoly poly(const FieldSpec& spec, std::size_t arity, std::uint32_t max_degree,
               std::size_t max_terms, Rng& rng) {
  const std::uint32_t q = spec.modulus();
  while (true) {
    MultiPoly p(spec, arity);
    const auto terms = rng.between(1, max_terms);
    for (std::uint64_t i = 0; i < terms; ++i) {
      p.add_term_raw(monomial(arity, max_degree, rng), static_cast<std::uint32_t>(rng.between(1, q - 1)));
    }
    if (!p.is_zero()) return p;
  }
}

MultiPoly homogeneous(const FieldSpec& spec, std::size_t arity, std::uint32_t degree,
                      std::size_t max_terms, Rng& rng) {
  const std::uint32_t q = spec.modulus();
  const auto pool = monomials_of_degree(arity, degree);
  while (true) {
    MultiPoly p(spec, arity);
    const auto terms = rng.between(1, max_terms);
    for (std::uint64_t i = 0; i < terms; ++i) {
      p.add_term_raw(pool[rng.below(pool.size())], static_cast<std::uint32_t>(rng.between(1, q - 1)));
    }
    if (!p.is_zero()) return p;
  }
}

Point point(const FieldSpec& spec, std::size_t arity, Rng& rng) {
  Point p(arity);
  for (auto& v : p) v = static_cast<std::uint32_t>(rng.below(spec.modulus()));
  return p;
}

MultiPoly vanishing_at(const FieldSpec& spec, const Point& at, std::uint32_t factors,
                       std::uint32_t extra_degree, Rng& rng) {
  const std::size_t m = at.size();
  const std::uint32_t q = spec.modulus();
  MultiPoly f = poly(spec, m, extra_degree, 3, rng);
  for (std::uint32_t j = 0; j < factors; ++j) {
    // sum_i c_i (x_i - at_i) with some c_i != 0.
    MultiPoly lin(spec, m);
    while (lin.is_zero()) {
      for (std::size_t i = 0; i < m; ++i) {
        auto c = static_cast<std::uint32_t>(rng.below(q));
        if (c == 0) continue;
        lin.add_term_raw(Monomial::unit(m, i), c);
        lin.add_term_raw(Monomial(m), spec.neg(spec.mul(c, at[i])));
      }
    }
    f = f * lin;
  }
  return f;
}

SurfaceFamilySpec family(const FieldSpec& spec, std::size_t n, std::size_t d, std::uint32_t ell,
                         Rng& rng) {
  SurfaceFamilySpec fam{spec, n, d, ell, {}};
  for (std::size_t i = 0; i < n - d; ++i) fam.h.push_back(homogeneous(spec, d, ell, 3, rng));
  return fam;
}

}  // namespace gen

namespace {

FieldSpec pick_field(const std::vector<std::uint32_t>& moduli, Rng& rng) {
  return FieldSpec(moduli[rng.below(moduli.size())]);
}

void record_failure(LemmaResult& r, std::string what) {
  ++r.failures;
  if (!r.first_failure) r.first_failure = std::move(what);
}

// Runs body(trial) and turns thrown library errors into failures.
template <typename Body>
void run_trials(LemmaResult& r, std::uint64_t trials, Body&& body) {
  for (std::uint64_t i = 0; i < trials; ++i) {
    ++r.trials;
    try {
      if (auto failure = body(i)) record_failure(r, "trial " + std::to_string(i) + ": " + *failure);
    } catch (const Error& e) {
      record_failure(r, "trial " + std::to_string(i) + " threw: " + e.what());
    }
  }
}

std::string str(const Monomial& m) { return m.to_string(); }

std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

}  // namespace

bool LemmaReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const LemmaResult& r) { return r.pass(); });
}

LemmaResult check_mon_sum(Rng& rng, std::uint64_t trials) {
  LemmaResult r{"mon-sum"};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    const std::size_t m = rng.between(1, 4);
    Monomial a = gen::monomial(m, 6, rng);
    Monomial b = gen::monomial(m, 6, rng);
    Monomial c = gen::monomial(m, 6, rng);
    auto before = grlex_cmp(b, c);
    auto after = grlex_cmp(a + b, a + c);
    if (before != after) {
      return "alpha=" + str(a) + " beta=" + str(b) + " gamma=" + str(c) + " order not preserved";
    }
    return std::nullopt;
  });
  return r;
}

LemmaResult check_pol_expansion(Rng& rng, std::uint64_t trials,
                                const std::vector<std::uint32_t>& moduli) {
  LemmaResult r{"pol-expansion"};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    FieldSpec spec = pick_field(moduli, rng);
    const std::size_t m = rng.between(1, 3);
    const std::size_t count = rng.between(1, 4);
    MultiPoly prod = MultiPoly::constant(spec, m, 1);
    Monomial expected(m);
    FieldElem coeff = spec.one();
    for (std::size_t i = 0; i < count; ++i) {
      MultiPoly f = gen::poly(spec, m, 4, 5, rng);
      auto lt = leading_monomial(f);
      expected = expected + lt.monomial;
      coeff *= lt.coeff;
      prod = prod * f;
    }
    auto got = leading_monomial(prod);
    if (!(got.monomial == expected) || !(got.coeff == coeff)) {
      return "LM(prod) = " + str(got.monomial) + ", product of LMs = " + str(expected);
    }
    return std::nullopt;
  });
  return r;
}

LemmaResult check_pol_prod_ineq(Rng& rng, std::uint64_t trials,
                                const std::vector<std::uint32_t>& moduli) {
  LemmaResult r{"pol-prod-ineq"};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    FieldSpec spec = pick_field(moduli, rng);
    const std::size_t m = rng.between(1, 3);
    MultiPoly f = gen::poly(spec, m, 4, 4, rng);
    MultiPoly g = gen::poly(spec, m, 4, 4, rng);
    while (leading_monomial(f).monomial == leading_monomial(g).monomial) {
      g = gen::poly(spec, m, 4, 4, rng);
    }
    if (grlex_cmp(leading_monomial(f).monomial, leading_monomial(g).monomial) > 0) std::swap(f, g);
    MultiPoly h = gen::poly(spec, m, 3, 4, rng);
    auto lf = leading_monomial(f * h).monomial;
    auto lg = leading_monomial(g * h).monomial;
    if (!(grlex_cmp(lf, lg) < 0)) return "LM(fh) = " + str(lf) + " not below LM(gh) = " + str(lg);
    return std::nullopt;
  });
  return r;
}

LemmaResult check_monomial_derivative_dominance(Rng& rng, std::uint64_t trials) {
  LemmaResult r{"monomial-derivative-dominance"};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    const std::size_t d = rng.between(1, 2);
    const std::size_t codim = rng.between(1, 2);
    const std::size_t n = d + codim;
    std::vector<Monomial> alphas;
    for (std::size_t i = 0; i < codim; ++i) {
      Monomial a = gen::monomial(d, 3, rng);
      while (a.is_one()) a = gen::monomial(d, 3, rng);
      alphas.push_back(a);
    }
    Monomial gamma = gen::monomial(n, 3, rng);
    Monomial b1 = gamma + gen::monomial(n, 4, rng);
    Monomial b2 = gamma + gen::monomial(n, 4, rng);
    auto before = grlex_cmp(substituted_key(b1, alphas), substituted_key(b2, alphas));
    auto after = grlex_cmp(substituted_key(b1 - gamma, alphas), substituted_key(b2 - gamma, alphas));
    if (before != after) {
      return "beta1=" + str(b1) + " beta2=" + str(b2) + " gamma=" + str(gamma) +
             ": order of substituted monomials changed";
    }
    return std::nullopt;
  });
  return r;
}

LemmaResult check_sum_derivative(Rng& rng, std::uint64_t trials,
                                 const std::vector<std::uint32_t>& moduli) {
  LemmaResult r{"sum-derivative"};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    FieldSpec spec = pick_field(moduli, rng);
    const std::size_t m = rng.between(1, 3);
    Point a = gen::point(spec, m, rng);
    MultiPoly f = gen::vanishing_at(spec, a, static_cast<std::uint32_t>(rng.below(4)), 2, rng);
    Monomial beta = gen::monomial(m, 3, rng);
    const std::uint32_t base = multiplicity(f, a);
    const std::uint32_t derived = multiplicity(hasse_derivative(f, beta), a);
    if (derived == kInfiniteMultiplicity) return std::nullopt;
    if (std::int64_t{derived} < std::int64_t{base} - static_cast<std::int64_t>(beta.degree())) {
      return "mult(f^(beta)) = " + std::to_string(derived) + " < " + std::to_string(base) + " - " +
             std::to_string(beta.degree());
    }
    return std::nullopt;
  });
  return r;
}

LemmaResult check_mult_composition(Rng& rng, std::uint64_t trials,
                                   const std::vector<std::uint32_t>& moduli) {
  LemmaResult r{"mult-composition"};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    FieldSpec spec = pick_field(moduli, rng);
    const std::size_t m = rng.between(1, 3);
    const std::size_t j = rng.between(1, 2);
    std::vector<MultiPoly> q;
    for (std::size_t i = 0; i < m; ++i) q.push_back(gen::poly(spec, j, 2, 3, rng));
    Point a = gen::point(spec, j, rng);
    Point qa(m);
    for (std::size_t i = 0; i < m; ++i) qa[i] = q[i].evaluate(a).value();
    MultiPoly p = gen::vanishing_at(spec, qa, static_cast<std::uint32_t>(rng.below(4)), 1, rng);
    const std::uint32_t outer = multiplicity(p, qa);
    const std::uint32_t composed = multiplicity(compose(p, q), a);
    if (composed < outer) {
      return "mult(P o Q, a) = " + std::to_string(composed) + " < mult(P, Q(a)) = " +
             std::to_string(outer);
    }
    return std::nullopt;
  });
  return r;
}

namespace {

std::vector<std::uint32_t> random_subset(const FieldSpec& spec, Rng& rng) {
  std::vector<std::uint32_t> a;
  while (a.empty()) {
    for (std::uint32_t v = 0; v < spec.modulus(); ++v) {
      if (rng.below(3) != 0) a.push_back(v);
    }
  }
  return a;
}

}  // namespace

LemmaResult check_schwartz_zippel(Rng& rng, std::uint64_t trials,
                                  const std::vector<std::uint32_t>& moduli) {
  LemmaResult r{"SZ"};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    FieldSpec spec = pick_field(moduli, rng);
    const std::size_t m = rng.between(1, 3);
    Point at = gen::point(spec, m, rng);
    MultiPoly f = gen::vanishing_at(spec, at, static_cast<std::uint32_t>(rng.below(3)), 2, rng);
    auto subset = random_subset(spec, rng);
    ZeroCensus c = zero_census(f, subset);
    if (c.zeros > c.bound) return "zeros " + std::to_string(c.zeros) + " > " + std::to_string(c.bound);
    return std::nullopt;
  });
  return r;
}

LemmaResult check_extended_schwartz_zippel(Rng& rng, std::uint64_t trials,
                                           const std::vector<std::uint32_t>& moduli) {
  LemmaResult r{"extended-SZ"};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    FieldSpec spec = pick_field(moduli, rng);
    const std::size_t m = rng.between(1, 3);
    Point at = gen::point(spec, m, rng);
    MultiPoly f = gen::vanishing_at(spec, at, static_cast<std::uint32_t>(rng.below(4)), 2, rng);
    auto subset = random_subset(spec, rng);
    ZeroCensus c = zero_census(f, subset);
    if (c.weighted > c.bound) {
      return "weighted zeros " + std::to_string(c.weighted) + " > " + std::to_string(c.bound);
    }
    return std::nullopt;
  });
  return r;
}

LemmaResult check_hasse_form(Rng& rng, std::uint64_t trials) {
  LemmaResult r{"HD-form"};
  const std::vector<std::uint32_t> moduli{2, 3, 5};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    FieldSpec spec = pick_field(moduli, rng);
    const std::size_t m = rng.between(1, 3);
    MultiPoly f = gen::poly(spec, m, 6, 6, rng);
    Monomial beta = gen::monomial(m, 4, rng);
    MultiPoly closed = hasse_derivative(f, beta);
    MultiPoly shifted = hasse_shift_oracle(f, beta);
    if (!(closed == shifted)) {
      return "f = " + f.to_string() + ", beta = " + str(beta) + ": " + closed.to_string() +
             " vs " + shifted.to_string();
    }
    return std::nullopt;
  });
  return r;
}

LemmaResult check_mult_inputsubset(Rng& rng, const SurfaceVanishingParams& p,
                                   std::uint64_t surfaces) {
  LemmaResult r{"mult-inputsubset(q=" + std::to_string(p.q) + ",k=" + std::to_string(p.k) +
                ",M=" + std::to_string(p.mult) + ",D=" + std::to_string(p.degree) + ")"};
  std::uint64_t qd = 1;
  for (std::size_t i = 0; i < p.d; ++i) qd *= p.q;
  const bool exists = binom_u64(p.mult + p.n - 1, p.n) * qd < binom_u64(p.degree + p.n, p.n);
  bool ineq = p.ell >= 1 && p.ell < p.q;
  for (std::uint32_t w = 0; w < p.k && ineq; ++w) {
    ineq = std::int64_t{p.ell} * (std::int64_t{p.degree} - w) <
           (std::int64_t{p.mult} - w) * std::int64_t{p.q};
  }
  const FieldSpec spec(p.q);
  run_trials(r, surfaces, [&](std::uint64_t) -> std::optional<std::string> {
    if (!exists) return std::string("parameters do not force a vanishing polynomial");
    if (!ineq) return std::string("parameters violate ell(D - w) < (M - w) q");
    SurfaceFamilySpec fam = gen::family(spec, p.n, p.d, p.ell, rng);
    SurfaceInstance inst{Point(p.n - p.d), gen::point(spec, p.n, rng), {}};
    for (auto& v : inst.rho) v = static_cast<std::uint32_t>(rng.between(1, p.q - 1));
    for (const auto& h : fam.h) {
      MultiPoly g = h;
      if (p.ell > 1) g = g + gen::poly(spec, p.d, p.ell - 1, 3, rng);
      inst.g.push_back(g);
    }
    std::set<Point> curve;
    for_each_point(field_values(spec), p.d, [&](const Point& t) { curve.insert(gamma_eval(inst, t)); });
    std::vector<Point> pts(curve.begin(), curve.end());
    auto in = find_vanishing_mult(spec, p.n, pts, p.degree, p.mult);
    if (!in.witness) return std::string("no witness although existence is forced");
    for (std::uint32_t s = 0; s < p.k; ++s) {
      for (const auto& beta : monomials_of_degree(p.n, s)) {
        MultiPoly fr = restrict_to_surface(hasse_derivative(*in.witness, beta), inst);
        if (!fr.is_zero()) {
          return "f^(" + str(beta) + ") restricted to the surface is " + fr.to_string("t");
        }
      }
    }
    return std::nullopt;
  });
  return r;
}

LemmaResult check_hd_reduction(Rng& rng, std::uint64_t trials,
                               const std::vector<std::uint32_t>& moduli) {
  LemmaResult r{"HD-reduction"};
  run_trials(r, trials, [&](std::uint64_t) -> std::optional<std::string> {
    FieldSpec spec = pick_field(moduli, rng);
    const std::uint32_t q = spec.modulus();
    const std::size_t n = rng.between(2, 3);
    const std::size_t d = rng.between(1, n - 1);
    const std::size_t codim = n - d;
    const auto ell = static_cast<std::uint32_t>(rng.between(1, std::min<std::uint32_t>(3, q - 1)));
    const auto k = static_cast<std::uint32_t>(rng.between(1, 2));
    SurfaceFamilySpec fam = gen::family(spec, n, d, ell, rng);
    const auto alphas = leading_exponents(fam);
    Point c;
    for (const auto& h : fam.h) c.push_back(leading_monomial(h).coeff.value());

    // Exponents with |alpha| < k(q-1), grouped by substituted key.
    std::map<Monomial, std::vector<Monomial>, GrlexLess> classes;
    for (const auto& a : monomials_up_to(k * (q - 1) - 1, n).monomials) {
      classes[substituted_key(a, alphas)].push_back(a);
    }
    std::vector<const std::vector<Monomial>*> all, shared;
    for (const auto& [key, members] : classes) {
      all.push_back(&members);
      if (members.size() > 1) shared.push_back(&members);
    }
    const auto& pool = (!shared.empty() && rng.below(2) == 0) ? shared : all;
    const auto& members = *pool[rng.below(pool.size())];
    std::vector<std::pair<Monomial, std::uint32_t>> b;
    while (b.empty()) {
      for (const auto& a : members) {
        if (rng.below(2) == 0) b.emplace_back(a, static_cast<std::uint32_t>(rng.between(1, q - 1)));
      }
    }

    const auto nonzero = field_values(spec, true);
    for (std::uint32_t s = 0; s < k; ++s) {
      for (const auto& beta : monomials_of_degree(n, s)) {
        bool found = false;
        for_each_point(nonzero, codim, [&](const Point& t) {
          if (found) return;
          std::uint32_t acc = 0;
          for (const auto& [alpha, coeff] : b) {
            if (!beta.divides(alpha)) continue;
            std::uint32_t term =
                spec.mul(coeff, multi_binom(alpha.exponents(), beta.exponents(), spec).value());
            const Monomial e = alpha.tail(codim) - beta.tail(codim);
            for (std::size_t i = 0; i < codim; ++i) {
              term = spec.mul(term, spec.pow(spec.mul(c[i], t[i]), e[i]));
            }
            acc = spec.add(acc, term);
          }
          found = acc != 0;
        });
        if (found) return std::nullopt;
      }
    }
    return "every f_beta vanishes on (F_q*)^(n-d) for " + std::to_string(b.size()) +
           " nonzero coefficients, q=" + std::to_string(q) + ", k=" + std::to_string(k);
  });
  return r;
}

LemmaReport lemma_suite(std::uint64_t seed, std::uint64_t trials,
                        const std::vector<std::uint32_t>& moduli) {
  LemmaReport report{seed, trials, {}};
  std::uint64_t index = 0;
  auto next_rng = [&] { return Rng(seed + (index++ << 32)); };

  { auto rng = next_rng(); report.results.push_back(check_mon_sum(rng, trials)); }
  { auto rng = next_rng(); report.results.push_back(check_pol_expansion(rng, trials, moduli)); }
  { auto rng = next_rng(); report.results.push_back(check_pol_prod_ineq(rng, trials, moduli)); }
  { auto rng = next_rng(); report.results.push_back(check_monomial_derivative_dominance(rng, trials)); }
  { auto rng = next_rng(); report.results.push_back(check_sum_derivative(rng, trials, moduli)); }
  { auto rng = next_rng(); report.results.push_back(check_mult_composition(rng, trials, moduli)); }
  { auto rng = next_rng(); report.results.push_back(check_schwartz_zippel(rng, trials, moduli)); }
  { auto rng = next_rng(); report.results.push_back(check_extended_schwartz_zippel(rng, trials, moduli)); }
  { auto rng = next_rng(); report.results.push_back(check_hasse_form(rng, trials)); }
  {
    // 5 * C(4,2) = 30 < 36 = C(9,2) and 2*7 = 14 < 15 = 3*5.
    auto rng = next_rng();
    report.results.push_back(check_mult_inputsubset(rng, {5, 2, 1, 2, 1, 3, 7}, 20));
  }
  {
    // 7 * C(5,2) = 70 < 78 = C(13,2); 2*11 = 22 < 28 and 2*10 = 20 < 21.
    auto rng = next_rng();
    report.results.push_back(check_mult_inputsubset(rng, {7, 2, 1, 2, 2, 4, 11}, 20));
  }
  { auto rng = next_rng(); report.results.push_back(check_hd_reduction(rng, trials, moduli)); }
  return report;
}

}  // namespace brkfq

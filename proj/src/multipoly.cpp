#include "brk/multipoly.hpp"

#include <algorithm>
#include <set>

#include "brk/errors.hpp"

namespace brkfq {

MultiPoly MultiPoly::constant(const FieldSpec& spec, std::size_t arity, std::int64_t c) {
  MultiPoly p(spec, arity);
  p.add_term_raw(Monomial(arity), spec.reduce(c));
  return p;
}

MultiPoly MultiPoly::variable(const FieldSpec& spec, std::size_t arity, std::size_t var) {
  MultiPoly p(spec, arity);
  p.add_term_raw(Monomial::unit(arity, var), 1);
  return p;
}

MultiPoly MultiPoly::term(const FieldSpec& spec, const Monomial& m, std::int64_t c) {
  MultiPoly p(spec, m.arity());
  p.add_term_raw(m, spec.reduce(c));
  return p;
}

std::int64_t MultiPoly::degree() const noexcept {
  // Grlex is graded, so the first stored term has maximal degree.
  if (terms_.empty()) return -1;
  return static_cast<std::int64_t>(terms_.begin()->first.degree());
}

void MultiPoly::check_arity(const Monomial& m) const {
  if (m.arity() != arity_) {
    throw ArityMismatch("monomial of arity " + std::to_string(m.arity()) +
                        " used with polynomial of arity " + std::to_string(arity_));
  }
}

void MultiPoly::check_compatible(const MultiPoly& o, const char* what) const {
  if (!(spec_ == o.spec_)) {
    throw FieldMismatch(std::string(what) + ": F_" + std::to_string(spec_.modulus()) + " vs F_" +
                        std::to_string(o.spec_.modulus()));
  }
  if (arity_ != o.arity_) {
    throw ArityMismatch(std::string(what) + ": arity " + std::to_string(arity_) + " vs " +
                        std::to_string(o.arity_));
  }
}

FieldElem MultiPoly::coeff(const Monomial& m) const {
  check_arity(m);
  auto it = terms_.find(m);
  return spec_.elem(it == terms_.end() ? 0 : it->second);
}

void MultiPoly::add_term(const Monomial& m, FieldElem c) {
  if (c.modulus() != spec_.modulus()) {
    throw FieldMismatch("coefficient from F_" + std::to_string(c.modulus()) +
                        " added to polynomial over F_" + std::to_string(spec_.modulus()));
  }
  add_term_raw(m, c.value());
}

void MultiPoly::add_term_raw(const Monomial& m, std::uint32_t c) {
  check_arity(m);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = spec_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o, "polynomial sum");
  MultiPoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term_raw(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o, "polynomial difference");
  MultiPoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term_raw(m, spec_.neg(c));
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(spec_, arity_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, spec_.neg(c));
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o, "polynomial product");
  MultiPoly r(spec_, arity_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) r.add_term_raw(ma + mb, spec_.mul(ca, cb));
  }
  return r;
}

MultiPoly MultiPoly::scaled(FieldElem c) const {
  if (c.modulus() != spec_.modulus()) throw FieldMismatch("scalar from a different field");
  MultiPoly r(spec_, arity_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, spec_.mul(v, c.value()));
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result = constant(spec_, arity_, 1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

FieldElem MultiPoly::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != arity_) {
    throw ArityMismatch("evaluate: point of arity " + std::to_string(point.size()) +
                        " for polynomial of arity " + std::to_string(arity_));
  }
  std::uint32_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t t = c;
    for (std::size_t i = 0; i < arity_ && t != 0; ++i) {
      if (m[i] != 0) t = spec_.mul(t, spec_.pow(point[i] % spec_.modulus(), m[i]));
    }
    acc = spec_.add(acc, t);
  }
  return spec_.elem(acc);
}

MultiPoly MultiPoly::homogeneous_part(std::uint64_t deg) const {
  MultiPoly r(spec_, arity_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == deg) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

bool MultiPoly::is_homogeneous_of_degree(std::uint64_t deg) const {
  if (terms_.empty()) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [deg](const auto& t) { return t.first.degree() == deg; });
}

std::string MultiPoly::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(i + 1);
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      s += std::to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += std::to_string(c) + "*" + mono;
    }
  }
  return s;
}

LeadingTerm leading_monomial(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("leading monomial of the zero polynomial");
  const auto& [m, c] = *f.terms().begin();
  return {m, f.spec().elem(c)};
}

MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> q, const PolyLimits& limits) {
  if (q.size() != f.arity()) {
    throw ArityMismatch("compose: " + std::to_string(q.size()) + " substitutions for arity " +
                        std::to_string(f.arity()));
  }
  if (q.empty()) {
    throw ArityMismatch("compose: constant polynomial has no variables to substitute");
  }
  const std::size_t target_arity = q.front().arity();
  for (const auto& qi : q) {
    if (qi.arity() != target_arity) throw ArityMismatch("compose: substitutions differ in arity");
    if (!(qi.spec() == f.spec())) throw FieldMismatch("compose: substitution over another field");
  }
  auto check_size = [&](const MultiPoly& p) {
    if (p.term_count() > limits.max_terms) {
      throw CapExceeded("compose: " + std::to_string(p.term_count()) + " terms exceed the cap " +
                        std::to_string(limits.max_terms));
    }
  };

  // powers[i][e] = Q_i^e, built on demand up to the largest exponent of x_i.
  std::vector<std::vector<MultiPoly>> powers(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) {
    std::uint32_t max_e = 0;
    for (const auto& [m, c] : f.terms()) max_e = std::max(max_e, m[i]);
    powers[i].reserve(max_e + 1);
    powers[i].push_back(MultiPoly::constant(f.spec(), target_arity, 1));
    for (std::uint32_t e = 1; e <= max_e; ++e) {
      powers[i].push_back(powers[i].back() * q[i]);
      check_size(powers[i].back());
    }
  }

  MultiPoly result(f.spec(), target_arity);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(f.spec(), target_arity, c);
    for (std::size_t i = 0; i < f.arity() && !t.is_zero(); ++i) {
      if (m[i] != 0) t = t * powers[i][m[i]];
      check_size(t);
    }
    result = result + t;
    check_size(result);
  }
  return result;
}

MultiPoly hasse_derivative(const MultiPoly& f, const Monomial& beta) {
  if (beta.arity() != f.arity()) throw ArityMismatch("hasse_derivative: arity mismatch");
  const FieldSpec& spec = f.spec();
  MultiPoly r(spec, f.arity());
  for (const auto& [alpha, c] : f.terms()) {
    if (!beta.divides(alpha)) continue;
    std::uint32_t b = multi_binom(alpha.exponents(), beta.exponents(), spec).value();
    if (b != 0) r.add_term_raw(alpha - beta, spec.mul(c, b));
  }
  return r;
}

FieldElem hasse_derivative_at(const MultiPoly& f, const Monomial& beta,
                              std::span<const std::uint32_t> point) {
  if (beta.arity() != f.arity() || point.size() != f.arity()) {
    throw ArityMismatch("hasse_derivative_at: arity mismatch");
  }
  const FieldSpec& spec = f.spec();
  std::uint32_t acc = 0;
  for (const auto& [alpha, c] : f.terms()) {
    if (!beta.divides(alpha)) continue;
    std::uint32_t t = spec.mul(c, multi_binom(alpha.exponents(), beta.exponents(), spec).value());
    for (std::size_t i = 0; i < f.arity() && t != 0; ++i) {
      // 0^0 = 1.
      if (std::uint32_t e = alpha[i] - beta[i]; e != 0) t = spec.mul(t, spec.pow(point[i], e));
    }
    acc = spec.add(acc, t);
  }
  return spec.elem(acc);
}

MultiPoly hasse_shift_oracle(const MultiPoly& f, const Monomial& beta, const PolyLimits& limits) {
  const std::size_t m = f.arity();
  if (beta.arity() != m) throw ArityMismatch("hasse_shift_oracle: arity mismatch");
  const FieldSpec& spec = f.spec();
  MultiPoly result(spec, m);
  if (f.is_zero() || m == 0) {
    if (m == 0 && beta.is_one()) return f;
    return result;
  }
  std::vector<MultiPoly> shift;
  shift.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    shift.push_back(MultiPoly::variable(spec, 2 * m, i) + MultiPoly::variable(spec, 2 * m, m + i));
  }
  MultiPoly expanded = compose(f, shift, limits);
  for (const auto& [gamma, c] : expanded.terms()) {
    if (gamma.tail(m) == beta) result.add_term_raw(gamma.head(m), c);
  }
  return result;
}

std::uint32_t multiplicity(const MultiPoly& f, std::span<const std::uint32_t> point) {
  if (point.size() != f.arity()) throw ArityMismatch("multiplicity: arity mismatch");
  if (f.is_zero()) return kInfiniteMultiplicity;
  const auto deg = static_cast<std::uint32_t>(f.degree());
  for (std::uint32_t shell = 0; shell <= deg; ++shell) {
    for (const auto& beta : monomials_of_degree(f.arity(), shell)) {
      if (!hasse_derivative_at(f, beta, point).is_zero()) return shell;
    }
  }
  // The derivative at the leading exponent is its (nonzero) coefficient.
  throw ConsistencyError("multiplicity exceeded the degree of a nonzero polynomial");
}

ZeroCensus zero_census(const MultiPoly& f, std::span<const std::uint32_t> subset,
                       const PolyLimits& limits) {
  if (f.is_zero()) throw DomainError("zero_census of the zero polynomial");
  const std::size_t m = f.arity();
  if (m == 0) throw ArityMismatch("zero_census needs at least one variable");
  std::vector<std::uint32_t> values;
  for (auto v : std::set<std::uint32_t>(subset.begin(), subset.end())) {
    if (v >= f.spec().modulus()) throw DomainError("zero_census: subset value outside F_q");
    values.push_back(v);
  }
  const std::uint64_t a = values.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total *= a;
    if (total > limits.census_points) {
      throw CapExceeded("zero_census: |A|^m exceeds the cap " +
                        std::to_string(limits.census_points));
    }
  }
  ZeroCensus census;
  std::uint64_t a_pow = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) a_pow *= a;
  census.bound = static_cast<std::uint64_t>(f.degree()) * a_pow;

  for_each_point(values, m, [&](const Point& p) {
    if (!f.evaluate(p).is_zero()) return;
    ++census.zeros;
    census.weighted += multiplicity(f, p);
  });
  if (census.zeros > census.bound || census.weighted > census.bound) {
    throw ConsistencyError("Schwartz-Zippel violated for " + f.to_string() + ": zeros " +
                           std::to_string(census.zeros) + ", weighted " +
                           std::to_string(census.weighted) + ", bound " +
                           std::to_string(census.bound));
  }
  return census;
}

std::vector<std::uint32_t> field_values(const FieldSpec& spec, bool nonzero_only) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t x = nonzero_only ? 1 : 0; x < spec.modulus(); ++x) v.push_back(x);
  return v;
}

}  // namespace brkfq

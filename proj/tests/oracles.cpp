#include "oracles.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t q) {
  if (k > n) return 0;
  boost::multiprecision::cpp_int acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return static_cast<std::uint32_t>(acc % q);
}

std::uint32_t multiplicity_by_shift(const MultiPoly& f, const Point& a) {
  const auto& spec = f.spec();
  const std::size_t m = f.arity();
  std::vector<MultiPoly> shift;
  for (std::size_t i = 0; i < m; ++i) {
    shift.push_back(MultiPoly::variable(spec, m, i) + MultiPoly::constant(spec, m, a[i]));
  }
  MultiPoly g = compose(f, shift);
  if (g.is_zero()) return kInfiniteMultiplicity;
  std::uint64_t low = UINT64_MAX;
  for (const auto& [mono, c] : g.terms()) low = std::min(low, mono.degree());
  return static_cast<std::uint32_t>(low);
}

std::uint64_t nullspace_size(const MatrixGF& m) {
  const std::uint32_t q = m.spec().modulus();
  std::vector<std::uint32_t> v(m.cols(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool zero = true;
    for (std::size_t r = 0; r < m.rows() && zero; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc += std::uint64_t{m.at(r, c)} * v[c];
      zero = acc % q == 0;
    }
    if (zero) ++count;
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == q) v[i++] = 0;
    if (i == v.size()) break;
  }
  return count;
}

MultiPoly interpolate_on_units(const FieldSpec& spec, std::size_t arity,
                               const std::function<std::uint32_t(const Point&)>& value) {
  const std::uint32_t q = spec.modulus();
  // basis[c - 1] = prod_{c' != c, c' != 0} (x - c') / (c - c'), one variable.
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::uint32_t c = 1; c < q; ++c) {
    std::vector<std::uint32_t> poly{1};
    std::uint32_t denom = 1;
    for (std::uint32_t o = 1; o < q; ++o) {
      if (o == c) continue;
      std::vector<std::uint32_t> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = (next[i + 1] + poly[i]) % q;
        next[i] = (next[i] + (q - o) * std::uint64_t{poly[i]}) % q;
      }
      poly = next;
      denom = static_cast<std::uint32_t>(std::uint64_t{denom} * ((c + q - o) % q) % q);
    }
    const std::uint32_t inv = spec.inv(denom);
    for (auto& x : poly) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % q);
    basis.push_back(poly);
  }
  MultiPoly out(spec, arity);
  Point p(arity, 1);
  while (true) {
    const std::uint32_t v = value(p);
    if (v != 0) {
      // Expand prod_i basis[p_i](x_i) term by term.
      std::vector<std::uint32_t> e(arity, 0);
      while (true) {
        std::uint64_t c = v;
        for (std::size_t i = 0; i < arity; ++i) c = c * basis[p[i] - 1][e[i]] % q;
        if (c != 0) out.add_term_raw(Monomial(e), static_cast<std::uint32_t>(c));
        std::size_t i = 0;
        while (i < arity && ++e[i] == q - 1) e[i++] = 0;
        if (i == arity) break;
      }
    }
    std::size_t i = 0;
    while (i < arity && ++p[i] == q) p[i++] = 1;
    if (i == arity) break;
  }
  return out;
}

bool vanishes_on(const MultiPoly& f, const std::vector<Point>& pts) {
  const std::uint32_t q = f.spec().modulus();
  for (const auto& pt : pts) {
    std::uint64_t acc = 0;
    for (const auto& [mono, c] : f.terms()) {
      std::uint64_t t = c;
      for (std::size_t i = 0; i < pt.size(); ++i) {
        for (std::uint32_t e = 0; e < mono[i]; ++e) t = t * pt[i] % q;
      }
      acc = (acc + t) % q;
    }
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace oracle

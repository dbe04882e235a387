#include "brk/monomial.hpp"

#include <functional>
#include <numeric>

#include "brk/errors.hpp"

namespace brkfq {

namespace {

void check_exponent(std::uint64_t e) {
  if (e > Monomial::kMaxExponent) {
    throw CapExceeded("exponent " + std::to_string(e) + " exceeds the cap " +
                      std::to_string(Monomial::kMaxExponent));
  }
}

void check_arity(const Monomial& a, const Monomial& b, const char* what) {
  if (a.arity() != b.arity()) {
    throw ArityMismatch(std::string(what) + ": arity " + std::to_string(a.arity()) + " vs " +
                        std::to_string(b.arity()));
  }
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) check_exponent(e);
}

Monomial Monomial::unit(std::size_t arity, std::size_t var) {
  Monomial m(arity);
  m.exps_.at(var) = 1;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  for (auto e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& alpha) const {
  check_arity(*this, alpha, "divides");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > alpha.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator+(const Monomial& o) const {
  check_arity(*this, o, "monomial product");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t e = std::uint64_t{exps_[i]} + o.exps_[i];
    check_exponent(e);
    r.exps_[i] = static_cast<std::uint32_t>(e);
  }
  return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
  check_arity(*this, o, "monomial quotient");
  if (!o.divides(*this)) {
    throw DomainError(o.to_string() + " does not divide " + to_string());
  }
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(*this);
  for (auto& e : r.exps_) {
    std::uint64_t v = std::uint64_t{e} * k;
    check_exponent(v);
    e = static_cast<std::uint32_t>(v);
  }
  return r;
}

Monomial Monomial::tail(std::size_t count) const {
  if (count > exps_.size()) throw ArityMismatch("tail longer than monomial");
  return Monomial(std::vector<std::uint32_t>(exps_.end() - static_cast<std::ptrdiff_t>(count),
                                             exps_.end()));
}

Monomial Monomial::head(std::size_t count) const {
  if (count > exps_.size()) throw ArityMismatch("head longer than monomial");
  return Monomial(std::vector<std::uint32_t>(exps_.begin(),
                                             exps_.begin() + static_cast<std::ptrdiff_t>(count)));
}

std::string Monomial::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

std::strong_ordering grlex_cmp(const Monomial& a, const Monomial& b) {
  check_arity(a, b, "grlex_cmp");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t degree) {
  // Lex-ascending within a fixed degree: the first coordinate is the most
  // significant, so enumerate it from 0 upward and recurse on the rest.
  std::vector<Monomial> out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> cur(arity, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t left) {
    if (pos + 1 == arity) {
      cur[pos] = left;
      out.emplace_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace brkfq

#include "brk/field.hpp"

#include <string>

#include "brk/errors.hpp"

namespace brkfq {

namespace {
constexpr std::uint32_t kTableLimit = 1u << 16;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t q) {
  if (q > kMaxModulus) {
    throw DomainError("field modulus " + std::to_string(q) + " exceeds 2^31");
  }
  if (!is_prime(q)) {
    throw DomainError("field modulus " + std::to_string(q) + " is not prime");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (q_ < kTableLimit) {
    auto t = std::make_shared<Tables>();
    t->fact.resize(q_);
    t->inv_fact.resize(q_);
    t->fact[0] = 1;
    for (std::uint32_t i = 1; i < q_; ++i) t->fact[i] = mul(t->fact[i - 1], i);
    t->inv_fact[q_ - 1] = inv(t->fact[q_ - 1]);
    for (std::uint32_t i = q_ - 1; i > 0; --i) t->inv_fact[i - 1] = mul(t->inv_fact[i], i);
    tables_ = std::move(t);
  }
}

FieldElem FieldSpec::elem(std::int64_t v) const { return FieldElem(reduce(v), q_); }
FieldElem FieldSpec::zero() const { return FieldElem(0, q_); }
FieldElem FieldSpec::one() const { return FieldElem(1 % q_, q_); }

std::uint32_t FieldSpec::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1 % q_;
  std::uint64_t base = a;
  while (e != 0) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  // Extended Euclid on (a, q).
  std::int64_t r0 = q_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t t = r0 - quot * r1;
    r0 = r1;
    r1 = t;
    t = s0 - quot * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

std::uint32_t FieldSpec::digit_binom(std::uint32_t n, std::uint32_t k) const {
  if (k > n) return 0;
  if (tables_) {
    return mul(tables_->fact[n], mul(tables_->inv_fact[k], tables_->inv_fact[n - k]));
  }
  if (k > n - k) k = n - k;
  std::uint32_t num = 1 % q_;
  std::uint32_t den = 1 % q_;
  for (std::uint32_t i = 0; i < k; ++i) {
    num = mul(num, n - i);
    den = mul(den, i + 1);
  }
  return mul(num, inv(den));
}

std::uint32_t FieldSpec::binom(std::uint64_t n, std::uint64_t k) const {
  if (k > n) return 0;
  std::uint32_t result = 1 % q_;
  while (k != 0 || n != 0) {
    auto nd = static_cast<std::uint32_t>(n % q_);
    auto kd = static_cast<std::uint32_t>(k % q_);
    if (kd > nd) return 0;
    result = mul(result, digit_binom(nd, kd));
    n /= q_;
    k /= q_;
  }
  return result;
}

void FieldElem::check_same_field(FieldElem o) const {
  if (q_ != o.q_) {
    throw FieldMismatch("cannot combine elements of F_" + std::to_string(q_) + " and F_" +
                        std::to_string(o.q_));
  }
}

FieldElem FieldElem::operator+(FieldElem o) const {
  check_same_field(o);
  std::uint32_t s = value_ + o.value_;
  return {s >= q_ ? s - q_ : s, q_};
}

FieldElem FieldElem::operator-(FieldElem o) const {
  check_same_field(o);
  return {value_ >= o.value_ ? value_ - o.value_ : value_ + q_ - o.value_, q_};
}

FieldElem FieldElem::operator*(FieldElem o) const {
  check_same_field(o);
  return {static_cast<std::uint32_t>(std::uint64_t{value_} * o.value_ % q_), q_};
}

FieldElem FieldElem::operator/(FieldElem o) const {
  check_same_field(o);
  return *this * o.inv();
}

FieldElem FieldElem::operator-() const { return {value_ == 0 ? 0 : q_ - value_, q_}; }

FieldElem FieldElem::inv() const {
  if (value_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  // Fermat: a^(q-2).
  return pow(q_ - 2);
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  std::uint64_t result = 1 % q_;
  std::uint64_t base = value_;
  while (e != 0) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return {static_cast<std::uint32_t>(result), q_};
}

FieldElem multi_binom(std::span<const std::uint32_t> alpha, std::span<const std::uint32_t> beta,
                      const FieldSpec& spec) {
  if (alpha.size() != beta.size()) {
    throw ArityMismatch("multi_binom: arity " + std::to_string(alpha.size()) + " vs " +
                        std::to_string(beta.size()));
  }
  std::uint32_t acc = 1 % spec.modulus();
  for (std::size_t i = 0; i < alpha.size() && acc != 0; ++i) {
    acc = spec.mul(acc, spec.binom(alpha[i], beta[i]));
  }
  return spec.elem(acc);
}

}  // namespace brkfq

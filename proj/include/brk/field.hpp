#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

namespace brkfq {

class FieldElem;

/// The prime field F_q. Construction checks primality by trial division and
/// rejects q > 2^31 so that every product of two residues fits in 64 bits.
///
/// For q below 2^16 factorial tables are precomputed and shared between
/// copies; binomials of digits are then O(1).
class FieldSpec {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  explicit FieldSpec(std::uint64_t q);

  std::uint32_t modulus() const noexcept { return q_; }

  FieldElem elem(std::int64_t v) const;
  FieldElem zero() const;
  FieldElem one() const;

  // Raw residue arithmetic. Inputs must already be canonical.
  std::uint32_t reduce(std::int64_t v) const noexcept;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;  // a, b < 2^31
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % q_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws DomainError for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  /// C(n, k) mod q by Lucas' theorem (base-q digits). Zero when k > n.
  std::uint32_t binom(std::uint64_t n, std::uint64_t k) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.q_ == b.q_;
  }

 private:
  // C(n, k) mod q for single digits n, k < q.
  std::uint32_t digit_binom(std::uint32_t n, std::uint32_t k) const;

  struct Tables {
    std::vector<std::uint32_t> fact;
    std::vector<std::uint32_t> inv_fact;
  };

  std::uint32_t q_;
  std::shared_ptr<const Tables> tables_;
};

/// A canonical residue in [0, q) tagged with its modulus. Mixing elements of
/// different fields throws FieldMismatch.
class FieldElem {
 public:
  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return q_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElem operator+(FieldElem o) const;
  FieldElem operator-(FieldElem o) const;
  FieldElem operator*(FieldElem o) const;
  FieldElem operator/(FieldElem o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(FieldElem o) { return *this = *this + o; }
  FieldElem& operator-=(FieldElem o) { return *this = *this - o; }
  FieldElem& operator*=(FieldElem o) { return *this = *this * o; }

  /// Throws DomainError on zero.
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

  friend bool operator==(FieldElem a, FieldElem b) noexcept {
    return a.value_ == b.value_ && a.q_ == b.q_;
  }
  friend std::ostream& operator<<(std::ostream& os, FieldElem e) { return os << e.value_; }

 private:
  friend class FieldSpec;
  FieldElem(std::uint32_t value, std::uint32_t q) noexcept : value_(value), q_(q) {}

  void check_same_field(FieldElem o) const;

  std::uint32_t value_;
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Multi-index binomial prod_i C(alpha_i, beta_i) mod q; zero as soon as some
/// beta_i > alpha_i. Throws ArityMismatch for different lengths.
FieldElem multi_binom(std::span<const std::uint32_t> alpha, std::span<const std::uint32_t> beta,
                      const FieldSpec& spec);

}  // namespace brkfq

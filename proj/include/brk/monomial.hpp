#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace brkfq {

/// Exponent tuple x^alpha of fixed arity. Entries are capped at
/// kMaxExponent; arithmetic that would exceed it throws CapExceeded.
class Monomial {
 public:
  static constexpr std::uint32_t kMaxExponent = 10'000;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);
  Monomial(std::initializer_list<std::uint32_t> exps)
      : Monomial(std::vector<std::uint32_t>(exps)) {}

  static Monomial unit(std::size_t arity, std::size_t var);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  /// Componentwise beta <= alpha.
  bool divides(const Monomial& alpha) const;

  Monomial operator+(const Monomial& o) const;
  /// Componentwise difference; throws DomainError unless o divides *this.
  Monomial operator-(const Monomial& o) const;
  /// Every exponent multiplied by k.
  Monomial scaled(std::uint64_t k) const;

  /// Last `count` coordinates (alpha' when count = n - d).
  Monomial tail(std::size_t count) const;
  Monomial head(std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic comparison: total degree first, then the first
/// differing exponent decides (smaller entry is smaller monomial).
std::strong_ordering grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) < 0; }
};
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

/// All exponents of the given arity and total degree exactly `degree`, in
/// grlex-ascending order.
std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t degree);

}  // namespace brkfq

#include "brk/polyparse.hpp"

#include <cctype>
#include <string>

#include "brk/errors.hpp"

namespace brkfq {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const FieldSpec& spec, std::size_t arity, char prefix)
      : text_(text), spec_(spec), arity_(arity), prefix_(prefix) {}

  MultiPoly run() {
    MultiPoly out(spec_, arity_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      auto [mono, coeff] = term();
      if (negative) coeff = spec_.neg(coeff);
      out.add_term_raw(mono, coeff);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return out;
  }

 private:
  std::pair<Monomial, std::uint32_t> term() {
    std::vector<std::uint32_t> exps(arity_, 0);
    std::uint32_t coeff = 1;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a number or variable");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = spec_.mul(coeff, spec_.reduce(static_cast<std::int64_t>(number() % spec_.modulus())));
      } else if (peek() == prefix_) {
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail(std::string("expected an index after '") + prefix_ + "'");
        }
        const std::uint64_t var = number();
        if (var < 1 || var > arity_) {
          fail("variable index " + std::to_string(var) + " outside 1.." + std::to_string(arity_));
        }
        std::uint64_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          e = number();
        }
        const std::uint64_t total = exps[var - 1] + e;
        if (total > Monomial::kMaxExponent) fail("exponent too large");
        exps[var - 1] = static_cast<std::uint32_t>(total);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {Monomial(std::move(exps)), coeff};
  }

  std::uint64_t number() {
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (UINT64_MAX - 9) / 10) fail("number too large");
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view text_;
  const FieldSpec& spec_;
  std::size_t arity_;
  char prefix_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const FieldSpec& spec, std::size_t arity, char prefix) {
  return Parser(text, spec, arity, prefix).run();
}

}  // namespace brkfq

#pragma once

// Integer sequence pairs (a_i, b_i) with 0 < a_i < b_i, the raw material of
// step-image spectra. Indices are 0-based and absolute: a tail rule is
// evaluated at the index itself, not at the offset past the explicit prefix.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specdens/numeric.hpp"

namespace specdens {

namespace rule {
struct Constant {
  BigInt value;
};
// slope * i + intercept
struct Linear {
  BigInt slope;
  BigInt intercept;
};
// coef * base^i
struct Exponential {
  BigInt coef;
  Nat base;
};
// The integer spelled by the first i+1 digits; exhausts past the string.
struct DigitPrefix {
  std::string digits;
};
}  // namespace rule

using SeqRule = std::variant<rule::Constant, rule::Linear, rule::Exponential,
                             rule::DigitPrefix>;

std::string describe(const SeqRule& r);

class Sequence {
 public:
  Sequence() = default;
  Sequence(std::vector<BigInt> prefix, std::optional<SeqRule> tail,
           bool computable = true);

  static Sequence constant(BigInt c);
  static Sequence linear(BigInt slope, BigInt intercept);
  static Sequence exponential(BigInt coef, Nat base);
  static Sequence digits(std::string digits, bool computable);
  static Sequence explicit_list(std::vector<BigInt> values);

  // Throws ExhaustedError past a finite source.
  BigInt at(std::size_t i) const;
  // Number of defined terms, or nullopt when the sequence is infinite.
  std::optional<std::size_t> length() const;

  const std::vector<BigInt>& prefix() const { return prefix_; }
  const std::optional<SeqRule>& tail() const { return tail_; }
  bool computable() const { return computable_; }

  std::string describe() const;

 private:
  std::vector<BigInt> prefix_;
  std::optional<SeqRule> tail_;
  bool computable_ = true;
};

// Growth of a sequence's tail, used to decide whether partial-mediant
// densities exist.
enum class Growth { Bounded, Polynomial, Geometric, Unknown };

class SeqPair {
 public:
  SeqPair() = default;
  SeqPair(Sequence a, Sequence b);

  const Sequence& a() const { return a_; }
  const Sequence& b() const { return b_; }

  // (a_i, b_i), validated against 0 < a_i < b_i.
  std::pair<BigInt, BigInt> at(std::size_t i) const;

  std::optional<std::size_t> length() const;
  bool computable() const { return a_.computable() && b_.computable(); }

  // lim a_i/b_i when both tails are closed forms with a rational limit.
  std::optional<Rational> rational_limit() const;
  // [lo, hi] containing lim a_i/b_i for a digit-string numerator over a
  // power-of-ten denominator; nullopt for other shapes.
  std::optional<std::pair<Rational, Rational>> digit_limit_bounds() const;

  Growth b_growth() const;

  std::string describe() const;

 private:
  Sequence a_;
  Sequence b_;
};

}  // namespace specdens

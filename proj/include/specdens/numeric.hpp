#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace specdens {

using Nat = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);
Nat checked_pow(Nat base, Nat exponent);

// Converts a non-negative BigInt that must fit a machine natural.
Nat to_nat(const BigInt& value);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

// Parses "p", "p/q" or a plain decimal like "0.25".
Rational parse_rational(const std::string& text);

// A positive natural or the infinite cardinal (aleph-0 stands in for every
// infinite size, since empty-signature arguments reduce to countable models).
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr explicit ExtNat(Nat n) : value_(n) {}

  static constexpr ExtNat infinite() { return ExtNat(); }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }
  Nat value() const;

  friend constexpr bool operator==(const ExtNat&, const ExtNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a,
                                                    const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const;

 private:
  std::optional<Nat> value_;
};

std::ostream& operator<<(std::ostream& out, const ExtNat& n);

}  // namespace specdens

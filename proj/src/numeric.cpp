#include "specdens/numeric.hpp"

#include <limits>

#include "specdens/errors.hpp"

namespace specdens {

Nat checked_add(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b) {
    throw OverflowError("natural addition overflows 64 bits");
  }
  return a + b;
}

Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > std::numeric_limits<Nat>::max() / a) {
    throw OverflowError("natural multiplication overflows 64 bits");
  }
  return a * b;
}

Nat checked_pow(Nat base, Nat exponent) {
  Nat result = 1;
  for (Nat i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

Nat to_nat(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<Nat>::max()) {
    throw OverflowError("value does not fit a 64-bit natural");
  }
  return static_cast<Nat>(value);
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw Error("malformed rational literal '" + text + "'");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw Error("malformed rational literal '" + text + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw Error("malformed rational literal '" + text + "'");
      }
    }
    return BigInt(s);
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : parse_int(whole);
    BigInt f = frac.empty() ? BigInt(0) : parse_int(frac);
    return Rational(w) + Rational(f, scale);
  }
  return Rational(parse_int(text));
}

Nat ExtNat::value() const {
  if (!value_) throw Error("ExtNat::value on the infinite value");
  return *value_;
}

std::string ExtNat::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("infinite");
}

std::ostream& operator<<(std::ostream& out, const ExtNat& n) {
  return out << n.to_string();
}

}  // namespace specdens

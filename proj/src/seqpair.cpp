#include "specdens/seqpair.hpp"

#include <sstream>

#include "specdens/errors.hpp"

namespace specdens {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BigInt eval_rule(const SeqRule& r, std::size_t i) {
  return std::visit(
      overloaded{
          [](const rule::Constant& c) -> BigInt { return c.value; },
          [i](const rule::Linear& l) -> BigInt { return l.slope * BigInt(i) + l.intercept; },
          [i](const rule::Exponential& e) -> BigInt {
            return e.coef * boost::multiprecision::pow(BigInt(e.base),
                                                       static_cast<unsigned>(i));
          },
          [i](const rule::DigitPrefix& d) -> BigInt {
            if (i + 1 > d.digits.size()) {
              throw ExhaustedError("digit source has only " +
                                   std::to_string(d.digits.size()) +
                                   " digits, term " + std::to_string(i) +
                                   " needs " + std::to_string(i + 1));
            }
            return BigInt(d.digits.substr(0, i + 1));
          },
      },
      r);
}

// Degree and leading coefficient of a polynomial rule.
std::optional<std::pair<int, BigInt>> poly(const SeqRule& r) {
  if (auto c = std::get_if<rule::Constant>(&r)) return std::make_pair(0, c->value);
  if (auto l = std::get_if<rule::Linear>(&r)) {
    if (l->slope == 0) return std::make_pair(0, l->intercept);
    return std::make_pair(1, l->slope);
  }
  if (auto e = std::get_if<rule::Exponential>(&r); e && e->base == 1) {
    return std::make_pair(0, e->coef);
  }
  return std::nullopt;
}

}  // namespace

std::string describe(const SeqRule& r) {
  return std::visit(
      overloaded{
          [](const rule::Constant& c) { return "const(" + c.value.str() + ")"; },
          [](const rule::Linear& l) {
            return l.slope.str() + "*i+" + l.intercept.str();
          },
          [](const rule::Exponential& e) {
            return e.coef.str() + "*" + std::to_string(e.base) + "^i";
          },
          [](const rule::DigitPrefix& d) { return "digits(" + d.digits + ")"; },
      },
      r);
}

Sequence::Sequence(std::vector<BigInt> prefix, std::optional<SeqRule> tail,
                   bool computable)
    : prefix_(std::move(prefix)), tail_(std::move(tail)), computable_(computable) {
  if (tail_) {
    if (auto d = std::get_if<rule::DigitPrefix>(&*tail_)) {
      if (d->digits.empty()) throw Error("digit source is empty");
      for (char c : d->digits) {
        if (c < '0' || c > '9') throw Error("digit source has a non-digit");
      }
    }
    if (auto e = std::get_if<rule::Exponential>(&*tail_); e && e->base == 0) {
      throw Error("exponential rule needs a positive base");
    }
  }
}

Sequence Sequence::constant(BigInt c) { return Sequence({}, rule::Constant{c}); }

Sequence Sequence::linear(BigInt slope, BigInt intercept) {
  return Sequence({}, rule::Linear{slope, intercept});
}

Sequence Sequence::exponential(BigInt coef, Nat base) {
  return Sequence({}, rule::Exponential{coef, base});
}

Sequence Sequence::digits(std::string digits, bool computable) {
  return Sequence({}, rule::DigitPrefix{std::move(digits)}, computable);
}

Sequence Sequence::explicit_list(std::vector<BigInt> values) {
  return Sequence(std::move(values), std::nullopt);
}

BigInt Sequence::at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (!tail_) {
    throw ExhaustedError("explicit sequence has only " +
                         std::to_string(prefix_.size()) + " terms");
  }
  return eval_rule(*tail_, i);
}

std::optional<std::size_t> Sequence::length() const {
  if (!tail_) return prefix_.size();
  if (auto d = std::get_if<rule::DigitPrefix>(&*tail_)) {
    return std::max(prefix_.size(), d->digits.size());
  }
  return std::nullopt;
}

std::string Sequence::describe() const {
  std::ostringstream out;
  if (!prefix_.empty()) {
    out << '(';
    for (std::size_t i = 0; i < prefix_.size(); ++i) out << (i ? "," : "") << prefix_[i];
    out << ')';
    if (tail_) out << " then ";
  }
  if (tail_) out << specdens::describe(*tail_);
  if (!computable_) out << " [non-computable]";
  return out.str();
}

SeqPair::SeqPair(Sequence a, Sequence b) : a_(std::move(a)), b_(std::move(b)) {}

std::pair<BigInt, BigInt> SeqPair::at(std::size_t i) const {
  BigInt x = a_.at(i);
  BigInt y = b_.at(i);
  if (!(0 < x && x < y)) {
    throw Error("sequence pair violates 0 < a < b at index " + std::to_string(i) +
                " (a=" + x.str() + ", b=" + y.str() + ")");
  }
  return {x, y};
}

std::optional<std::size_t> SeqPair::length() const {
  auto la = a_.length();
  auto lb = b_.length();
  if (!la) return lb;
  if (!lb) return la;
  return std::min(*la, *lb);
}

std::optional<Rational> SeqPair::rational_limit() const {
  if (!a_.tail() || !b_.tail()) return std::nullopt;
  const SeqRule& ra = *a_.tail();
  const SeqRule& rb = *b_.tail();
  auto pa = poly(ra);
  auto pb = poly(rb);
  if (pa && pb) {
    if (pa->first < pb->first) return Rational(0);
    if (pa->first == pb->first) return Rational(pa->second, pb->second);
    return std::nullopt;
  }
  auto eb = std::get_if<rule::Exponential>(&rb);
  if (pa && eb && eb->base >= 2) return Rational(0);
  auto ea = std::get_if<rule::Exponential>(&ra);
  if (ea && eb && ea->base == eb->base) return Rational(ea->coef, eb->coef);
  return std::nullopt;
}

std::optional<std::pair<Rational, Rational>> SeqPair::digit_limit_bounds() const {
  if (!a_.tail() || !b_.tail()) return std::nullopt;
  auto d = std::get_if<rule::DigitPrefix>(&*a_.tail());
  auto e = std::get_if<rule::Exponential>(&*b_.tail());
  if (!d || !e || e->base != 10 || e->coef != 10) return std::nullopt;
  BigInt scale = boost::multiprecision::pow(BigInt(10),
                                            static_cast<unsigned>(d->digits.size()));
  Rational lo(BigInt(d->digits), scale);
  return std::make_pair(lo, lo + Rational(1, scale));
}

Growth SeqPair::b_growth() const {
  if (!b_.tail()) return Growth::Unknown;
  return std::visit(
      overloaded{
          [](const rule::Constant&) { return Growth::Bounded; },
          [](const rule::Linear& l) {
            return l.slope == 0 ? Growth::Bounded : Growth::Polynomial;
          },
          [](const rule::Exponential& e) {
            return e.base == 1 ? Growth::Bounded : Growth::Geometric;
          },
          [](const rule::DigitPrefix&) { return Growth::Geometric; },
      },
      *b_.tail());
}

std::string SeqPair::describe() const {
  return "a=" + a_.describe() + ", b=" + b_.describe();
}

}  // namespace specdens

#include "specdens/density.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "specdens/errors.hpp"
#include "specdens/theory.hpp"

namespace specdens {

DensityValue DensityValue::exact(Rational r, std::string source) {
  DensityValue d;
  d.kind_ = Kind::Exact;
  d.exact_ = std::move(r);
  d.note_ = std::move(source);
  return d;
}

DensityValue DensityValue::limit(LimitInfo info, std::string note) {
  DensityValue d;
  d.kind_ = Kind::Limit;
  d.limit_ = std::move(info);
  d.note_ = std::move(note);
  return d;
}

DensityValue DensityValue::undefined(std::string reason, std::optional<LimitInfo> along) {
  DensityValue d;
  d.kind_ = Kind::Undefined;
  d.limit_ = std::move(along);
  d.note_ = std::move(reason);
  return d;
}

DensityValue DensityValue::unknown(std::string reason) {
  DensityValue d;
  d.kind_ = Kind::Unknown;
  d.note_ = std::move(reason);
  return d;
}

const Rational& DensityValue::value() const {
  if (kind_ != Kind::Exact) throw PreconditionError("density is not an exact rational");
  return exact_;
}

Tri DensityValue::computable() const {
  switch (kind_) {
    case Kind::Exact: return Tri::Yes;
    case Kind::Limit: return limit_->computable ? Tri::Yes : Tri::No;
    default: return Tri::Unknown;
  }
}

std::optional<std::pair<Rational, Rational>> DensityValue::bounds() const {
  if (kind_ == Kind::Exact) return std::make_pair(exact_, exact_);
  if (kind_ == Kind::Limit && limit_->lower && limit_->upper) {
    return std::make_pair(*limit_->lower, *limit_->upper);
  }
  return std::nullopt;
}

namespace {

std::string decimal(const Rational& r, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << to_double(r);
  return out.str();
}

}  // namespace

std::string DensityValue::to_string() const {
  switch (kind_) {
    case Kind::Exact: return specdens::to_string(exact_) + " (exact)";
    case Kind::Limit: {
      std::string s = "~" + decimal(limit_->best) + " (limit";
      if (limit_->lower && limit_->upper) {
        s += " in [" + decimal(*limit_->lower) + ", " + decimal(*limit_->upper) + "]";
      }
      if (!limit_->computable) s += ", not computable";
      if (!note_.empty()) s += ", " + note_;
      return s + ")";
    }
    case Kind::Undefined: {
      std::string s = "undefined (" + note_;
      if (limit_) s += "; block ends tend to ~" + decimal(limit_->best);
      return s + ")";
    }
    case Kind::Unknown: return "unknown (" + note_ + ")";
  }
  return "?";
}

namespace {

// Block-end ratios A(n)/B(n) for the first blocks a finite generator allows.
std::vector<std::pair<BigInt, Rational>> block_end_ratios(const SeqPair& sp, std::size_t k,
                                                          bool doubled) {
  std::vector<std::pair<BigInt, Rational>> out;
  BigInt A = 0, B = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (sp.length() && i >= *sp.length()) break;
    auto [a, b] = sp.at(i);
    A += a;
    B += b;
    out.emplace_back(doubled ? 2 * B : B, Rational(A, B));
  }
  return out;
}

DensityValue step_density(const SeqPair& sp, bool doubled, bool computable) {
  if (!sp.a().tail() || !sp.b().tail()) {
    return DensityValue::unknown("sequence pair is only given as a finite list");
  }
  const Growth g = sp.b_growth();
  LimitInfo info;
  info.approximations = block_end_ratios(sp, 20, doubled);
  info.computable = computable;
  if (!info.approximations.empty()) info.best = info.approximations.back().second;

  if (auto r = sp.rational_limit()) {
    const bool slow = g == Growth::Bounded || g == Growth::Polynomial;
    // With geometric b the block interiors stay away from the block ends
    // unless the ratio is degenerate.
    if (slow || *r == 0 || *r == 1) {
      return DensityValue::exact(*r, "limit of a_i/b_i");
    }
    if (g == Growth::Geometric) {
      info.best = *r;
      info.lower = info.upper = *r;
      return DensityValue::undefined(
          "b grows geometrically, so in-block peaks do not approach the block-end limit", info);
    }
    return DensityValue::unknown("growth of b is not known");
  }
  if (auto bounds = sp.digit_limit_bounds()) {
    info.lower = bounds->first;
    info.upper = bounds->second;
    info.best = bounds->first;
    if (g == Growth::Geometric) {
      return DensityValue::undefined(
          "b grows geometrically, so in-block peaks do not approach the block-end limit", info);
    }
    return DensityValue::limit(info, "digit prefixes");
  }
  return DensityValue::unknown("sequence pair has no known limit");
}

}  // namespace

DensityValue exact_density(const SpectrumClass& s) {
  return std::visit(
      [&](const auto& v) -> DensityValue {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, spec::Finite>) {
          return DensityValue::exact(0, "finite set");
        } else if constexpr (std::is_same_v<T, spec::Cofinite>) {
          return DensityValue::exact(1, "cofinite set");
        } else if constexpr (std::is_same_v<T, spec::Periodic>) {
          std::vector<Nat> res;
          for (Nat r : v.residues) res.push_back(r % v.modulus);
          std::sort(res.begin(), res.end());
          res.erase(std::unique(res.begin(), res.end()), res.end());
          return DensityValue::exact(Rational(BigInt(res.size()), BigInt(v.modulus)),
                                     "residues per period");
        } else if constexpr (std::is_same_v<T, spec::Geometric>) {
          return DensityValue::exact(v.complemented ? 1 : 0,
                                     v.complemented ? "complement of a geometric set"
                                                    : "geometric set");
        } else if constexpr (std::is_same_v<T, spec::StepImage>) {
          return step_density(v.seq, false, v.seq.computable());
        } else if constexpr (std::is_same_v<T, spec::GStep>) {
          return step_density(v.seq, true, v.seq.computable());
        } else {
          if (v.declared_density) {
            return DensityValue::exact(*v.declared_density, "declared by the oracle");
          }
          return DensityValue::unknown("oracle-backed spectrum without a declared density");
        }
      },
      s.variant());
}

std::vector<Sample> DensityReport::block_ends() const {
  std::vector<Sample> out;
  for (const auto& s : samples) {
    if (s.block_end) out.push_back(s);
  }
  return out;
}

std::string DensityReport::to_csv() const {
  std::ostringstream out;
  out << "n,count,ratio_num,ratio_den,ratio_float,block_end\n";
  for (const auto& s : samples) {
    out << s.n << ',' << s.count << ',' << numerator(s.ratio) << ',' << denominator(s.ratio)
        << ',' << decimal(s.ratio, 9) << ',' << (s.block_end ? 1 : 0) << '\n';
  }
  return out.str();
}

DensityReport estimate_density(const SpectrumClass& s, Nat N) {
  if (N == 0) throw PreconditionError("estimate_density needs N >= 1");
  std::map<Nat, bool> points;
  for (Nat p = 1; p <= N; p *= 2) {
    points[p] = false;
    if (p > N / 2) break;
  }
  points[N] = points.count(N) ? points[N] : false;

  const SeqPair* sp = nullptr;
  bool doubled = false;
  if (auto* st = std::get_if<spec::StepImage>(&s.variant())) sp = &st->seq;
  if (auto* g = std::get_if<spec::GStep>(&s.variant())) {
    sp = &g->seq;
    doubled = true;
  }
  DensityReport rep;
  if (sp) {
    try {
      BigInt B = 0;
      for (std::size_t i = 0;; ++i) {
        if (sp->length() && i >= *sp->length()) break;
        B += sp->at(i).second;
        BigInt end = doubled ? 2 * B : B;
        if (end > N) break;
        points[to_nat(end)] = true;
      }
    } catch (const Error& e) {
      rep.error = e.what();
    }
  }

  for (const auto& [n, is_end] : points) {
    try {
      Nat c = s.count_upto(n);
      rep.samples.push_back({n, c, Rational(BigInt(c), BigInt(n)), is_end});
    } catch (const Error& e) {
      if (rep.error.empty()) rep.error = "at n=" + std::to_string(n) + ": " + e.what();
      break;
    }
  }
  if (!rep.samples.empty()) {
    rep.final_ratio = rep.samples.back().ratio;
    for (std::size_t i = rep.samples.size() / 2; i < rep.samples.size(); ++i) {
      const Rational& r = rep.samples[i].ratio;
      if (!rep.min_late || r < *rep.min_late) rep.min_late = r;
      if (!rep.max_late || r > *rep.max_late) rep.max_late = r;
    }
  }
  return rep;
}

std::vector<MediantBlock> mediant_blocks(const SeqPair& sp, std::size_t k) {
  std::vector<MediantBlock> out;
  BigInt A = 0, B = 0;
  for (std::size_t i = 0; i < k; ++i) {
    auto [a, b] = sp.at(i);
    MediantBlock m{a, b, A, B, Rational(A + a, B + a), Rational(A + a, B + b)};
    out.push_back(std::move(m));
    A += a;
    B += b;
  }
  return out;
}

Rational mediant_at(const std::vector<MediantBlock>& blocks, const BigInt& m) {
  if (m < 1) throw PreconditionError("mediant index starts at 1");
  auto it = std::partition_point(blocks.begin(), blocks.end(), [&](const MediantBlock& blk) {
    return blk.before_b + blk.b < m;
  });
  if (it == blocks.end()) throw PreconditionError("mediant index past the computed blocks");
  BigInt off = m - it->before_b;
  BigInt count = it->before_a + std::min(off, it->a);
  return Rational(count, m);
}

std::vector<Rational> mediants(const SeqPair& sp, std::size_t k, std::size_t max_terms) {
  std::vector<Rational> out;
  BigInt A = 0, B = 0;
  for (std::size_t i = 0; i < k; ++i) {
    auto [a, b] = sp.at(i);
    if (BigInt(out.size()) + b > max_terms) {
      throw CapError("mediant sequence exceeds " + std::to_string(max_terms) + " terms");
    }
    for (BigInt t = 1; t <= b; ++t) {
      if (t <= a) ++A;
      ++B;
      out.emplace_back(A, B);
    }
  }
  return out;
}

DensityValue density_rel(const Theory& t, const eqlogic::Formula& f,
                         const eqlogic::Limits& limits) {
  // Dropping finitely many small sizes never changes a density.
  return exact_density(spec_rel(t, f, limits));
}

const std::vector<std::string>& theorem_rules() {
  static const std::vector<std::string> rules = {
      "si-density",  "gentle-density", "smooth-fmp-density",
      "sfw-density", "cf-density",     "gentle-implies",
      "non-si-gentle", "sfw-gentle",   "si-sfw-smooth"};
  return rules;
}

TheoremCheck check_theorems(const PropertyVector& pv, const DensityValue& d) {
  TheoremCheck out;
  auto is = [&](Property p, Tri t) { return pv.value(p) == t; };
  auto fail = [&](const std::string& rule, std::string msg) {
    out.violations.push_back({rule, std::move(msg)});
  };
  const auto b = d.bounds();
  auto need_bounds = [&](const std::string& rule) {
    if (b) return true;
    out.skipped.push_back(rule + ": density is " + d.to_string());
    return false;
  };
  const bool zero_or_one_excluded = b && b->first > 0 && b->second < 1;

  if (need_bounds("si-density") && b->first > 0) {
    for (Property p : {Property::SI, Property::FMP, Property::FW}) {
      if (is(p, Tri::No)) {
        fail("si-density", "positive density but " + to_string(p) + "=No");
      }
    }
  }
  if (is(Property::G, Tri::Yes) && need_bounds("gentle-density") && zero_or_one_excluded) {
    fail("gentle-density", "gentle but density " + d.to_string() + " is neither 0 nor 1");
  }
  if (is(Property::SM, Tri::Yes) && is(Property::FMP, Tri::Yes) &&
      need_bounds("smooth-fmp-density") && b->second < 1) {
    fail("smooth-fmp-density", "smooth with FMP but density " + d.to_string() + " is below 1");
  }
  if (is(Property::SW, Tri::Yes) && need_bounds("sfw-density") && zero_or_one_excluded) {
    fail("sfw-density", "strongly finitely witnessable but density " + d.to_string() +
                            " is neither 0 nor 1");
  }
  if (is(Property::CF, Tri::Yes)) {
    if (d.kind() == DensityValue::Kind::Undefined || d.kind() == DensityValue::Kind::Unknown) {
      out.skipped.push_back("cf-density: density is " + d.to_string());
    } else if (d.computable() == Tri::No) {
      fail("cf-density", "computable minimal model function but density is not computable");
    }
  }
  if (is(Property::G, Tri::Yes)) {
    for (Property p : {Property::CF, Property::FMP, Property::FW}) {
      if (is(p, Tri::No)) fail("gentle-implies", "gentle but " + to_string(p) + "=No");
    }
  }
  if (is(Property::SI, Tri::No) && is(Property::G, Tri::No)) {
    fail("non-si-gentle", "not stably infinite but G=No");
  }
  if (is(Property::SW, Tri::Yes) && is(Property::G, Tri::No)) {
    fail("sfw-gentle", "strongly finitely witnessable but G=No");
  }
  if (is(Property::SI, Tri::Yes) && is(Property::SW, Tri::Yes) && is(Property::SM, Tri::No)) {
    fail("si-sfw-smooth", "stably infinite and strongly finitely witnessable but SM=No");
  }
  return out;
}

}  // namespace specdens

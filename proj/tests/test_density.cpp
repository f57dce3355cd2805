#include <gtest/gtest.h>

#include "specdens/density.hpp"
#include "specdens/errors.hpp"
#include "specdens/theory.hpp"

using namespace specdens;

namespace {

// Membership bitmap of a step image over [1, n], built position by position.
std::vector<bool> step_members(const SeqPair& sp, Nat n) {
  std::vector<bool> in(n + 1, false);
  Nat pos = 0;
  for (std::size_t i = 0; pos < n; ++i) {
    auto [a, b] = sp.at(i);
    for (BigInt t = 1; t <= b && pos < n; ++t) {
      ++pos;
      if (t <= a) in[pos] = true;
    }
  }
  return in;
}

SeqPair omega_pair() {
  return SeqPair(Sequence::digits("57824", false), Sequence::exponential(10, 10));
}

PropertyVector vec(const std::string& cells) {
  PropertyVector pv;
  for (std::size_t i = 0; i < 7; ++i) {
    Tri t = cells[i] == 'T' ? Tri::Yes : cells[i] == 'F' ? Tri::No : Tri::Unknown;
    pv[kProperties[i]] = {t, "test"};
  }
  return pv;
}

std::vector<std::string> names(const TheoremCheck& c) {
  std::vector<std::string> out;
  for (const auto& v : c.violations) out.push_back(v.rule);
  return out;
}

}  // namespace

TEST(Density, ClosedForms) {
  EXPECT_EQ(exact_density(SpectrumClass::periodic(2, {0})).value(), Rational(1, 2));
  EXPECT_EQ(exact_density(SpectrumClass::periodic(6, {1, 3, 3}, {2}, {7})).value(), Rational(1, 3));
  EXPECT_EQ(exact_density(SpectrumClass::geometric(2)).value(), 0);
  EXPECT_EQ(exact_density(SpectrumClass::geometric(2, 0, 0, true)).value(), 1);
  EXPECT_EQ(exact_density(SpectrumClass::finite({2, 5})).value(), 0);
  EXPECT_EQ(exact_density(SpectrumClass::cofinite({})).value(), 1);
  EXPECT_EQ(exact_density(SpectrumClass::empty()).value(), 0);
  EXPECT_EQ(exact_density(SpectrumClass::periodic(2, {0})).to_string(), "1/2 (exact)");
}

TEST(Density, DisjointPeriodicUnionAdds) {
  for (Nat m : {3, 5, 12}) {
    for (Nat r = 0; r + 1 < m; ++r) {
      auto d1 = exact_density(SpectrumClass::periodic(m, {r})).value();
      auto d2 = exact_density(SpectrumClass::periodic(m, {r + 1})).value();
      auto both = exact_density(SpectrumClass::periodic(m, {r, r + 1})).value();
      EXPECT_EQ(d1 + d2, both);
    }
  }
}

TEST(Density, StepImages) {
  SeqPair third(Sequence::constant(1), Sequence::constant(3));
  EXPECT_EQ(exact_density(SpectrumClass::step_image(third)).value(), Rational(1, 3));
  SeqPair lin(Sequence::linear(1, 1), Sequence::linear(3, 3));
  EXPECT_EQ(exact_density(SpectrumClass::step_image(lin)).value(), Rational(1, 3));
  // Polynomial numerator over a geometric denominator: the ratio goes to 0.
  SeqPair sparse(Sequence::linear(1, 1), Sequence::exponential(2, 2));
  EXPECT_EQ(exact_density(SpectrumClass::step_image(sparse)).value(), 0);

  auto d = exact_density(SpectrumClass::step_image(omega_pair()));
  EXPECT_EQ(d.kind(), DensityValue::Kind::Undefined);
  ASSERT_TRUE(d.limit_info());
  EXPECT_EQ(*d.limit_info()->lower, Rational(57824, 100000));
  EXPECT_FALSE(d.limit_info()->computable);
  EXPECT_FALSE(d.bounds());
}

// Why the digit pair has no density: the ratio right after each block's
// run of members stays near 10r/(1+9r), far from r.
TEST(Density, DigitPairOscillates) {
  auto in = step_members(omega_pair(), 111110);
  auto ratio = [&](Nat n) {
    Nat c = 0;
    for (Nat k = 1; k <= n; ++k) c += in[k];
    return Rational(c, n);
  };
  EXPECT_EQ(ratio(1110), Rational(640, 1110));
  EXPECT_EQ(ratio(1110 + 5782), Rational(6422, 6892));
  EXPECT_EQ(ratio(11110), Rational(6422, 11110));
  EXPECT_EQ(ratio(11110 + 57824), Rational(64246, 68934));
  EXPECT_GT(ratio(11110 + 57824), Rational(93, 100));
  EXPECT_LT(ratio(111110), Rational(579, 1000));
}

TEST(Density, EstimatePeriodic) {
  auto rep = estimate_density(SpectrumClass::periodic(2, {0}), 10000);
  ASSERT_TRUE(rep.final_ratio);
  EXPECT_EQ(rep.samples.back().n, 10000u);
  EXPECT_LT(abs(*rep.final_ratio - Rational(1, 2)), Rational(1, 1000));
  for (const auto& s : rep.samples) {
    // Exact count of evens up to n.
    EXPECT_EQ(s.count, s.n / 2);
    EXPECT_LE(abs(s.ratio - Rational(1, 2)), Rational(2, s.n));
  }
  EXPECT_THROW(estimate_density(SpectrumClass::periodic(2, {0}), 0), PreconditionError);
}

TEST(Density, EstimateGeometric) {
  auto rep = estimate_density(SpectrumClass::geometric(2), 1000000);
  for (const auto& s : rep.samples) {
    Nat lg = 0;
    while ((Nat(2) << lg) <= s.n) ++lg;
    EXPECT_EQ(s.count, lg + 1) << s.n;
  }
  // floor(log2 10^6) + 1 = 20 members, so the ratio is exactly 2e-5.
  EXPECT_EQ(*rep.final_ratio, Rational(20, 1000000));
}

TEST(Density, EstimateBlockEnds) {
  SeqPair sp(Sequence::explicit_list({5, 57, 578}), Sequence::explicit_list({10, 100, 1000}));
  auto rep = estimate_density(SpectrumClass::step_image(sp), 1110);
  auto ends = rep.block_ends();
  ASSERT_EQ(ends.size(), 3u);
  EXPECT_EQ(ends[0].ratio, Rational(5, 10));
  EXPECT_EQ(ends[1].ratio, Rational(62, 110));
  EXPECT_EQ(ends[2].ratio, Rational(640, 1110));
  auto csv = rep.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,count,ratio_num,ratio_den,ratio_float,block_end");
  EXPECT_NE(csv.find("\n1110,640,64,111,0.576576577,1\n"), std::string::npos);
}

TEST(Density, EstimateOracleStops) {
  spec::OracleBacked o;
  o.label = "table";
  o.intervals = {{1, 1}, {4, 4}};
  o.known_upto = 5;
  auto rep = estimate_density(SpectrumClass::oracle(o), 64);
  EXPECT_FALSE(rep.error.empty());
  EXPECT_EQ(rep.samples.back().n, 4u);
}

TEST(Density, MediantSequence) {
  SeqPair sp(Sequence::explicit_list({4, 3, 7}), Sequence::explicit_list({6, 4, 10}));
  auto m = mediants(sp, 3);
  ASSERT_EQ(m.size(), 20u);
  auto in = step_members(sp, 20);
  auto blocks = mediant_blocks(sp, 3);
  Nat c = 0;
  for (Nat n = 1; n <= 20; ++n) {
    c += in[n];
    EXPECT_EQ(m[n - 1], Rational(c, n));
    EXPECT_EQ(mediant_at(blocks, n), Rational(c, n));
  }
  EXPECT_EQ(blocks[1].peak, Rational(7, 9));
  EXPECT_EQ(blocks[1].end, Rational(7, 10));
  EXPECT_THROW(mediant_at(blocks, 21), PreconditionError);
  EXPECT_THROW(mediants(SeqPair(Sequence::constant(1), Sequence::constant(2)), 100, 50), CapError);
}

TEST(Density, RelativeDensity) {
  auto evens = Theory::make("evens", SpectrumClass::periodic(2, {0}), true);
  EXPECT_EQ(density_rel(evens, eqlogic::parse("(= x x)")).value(), Rational(1, 2));
  EXPECT_EQ(density_rel(evens, eqlogic::parse("(distinct x y z)")).value(), Rational(1, 2));
  EXPECT_EQ(density_rel(evens, eqlogic::parse("(and (= x y) (not (= x y)))")).value(), 0);
}

TEST(Theorems, Examples) {
  PropertyVector even = vec("TFTFTTF");
  EXPECT_TRUE(check_theorems(even, DensityValue::exact(Rational(1, 2))).violations.empty());
  even[Property::G] = {Tri::Yes, "flipped"};
  EXPECT_EQ(names(check_theorems(even, DensityValue::exact(Rational(1, 2)))),
            std::vector<std::string>{"gentle-density"});

  EXPECT_TRUE(check_theorems(vec("TTTTTTT"), DensityValue::exact(1)).violations.empty());
  std::vector<std::string> three = {"gentle-density", "smooth-fmp-density", "sfw-density"};
  EXPECT_EQ(names(check_theorems(vec("TTTTTTT"), DensityValue::exact(Rational(1, 2)))), three);
}

TEST(Theorems, UnknownNeverFires) {
  EXPECT_TRUE(check_theorems(vec("???????"), DensityValue::exact(Rational(1, 2))).violations.empty());
  auto c = check_theorems(vec("TTTTTTT"), DensityValue::unknown("test"));
  EXPECT_TRUE(c.violations.empty());
  EXPECT_FALSE(c.skipped.empty());
}

TEST(Theorems, NonComputableLimit) {
  LimitInfo li;
  li.best = Rational(57824, 100000);
  li.lower = li.best;
  li.upper = Rational(57825, 100000);
  li.computable = false;
  auto d = DensityValue::limit(li);
  EXPECT_EQ(names(check_theorems(vec("?????T?"), d)), std::vector<std::string>{"cf-density"});
  EXPECT_EQ(names(check_theorems(vec("F??????"), d)), std::vector<std::string>{"si-density"});
  EXPECT_TRUE(check_theorems(vec("TFTFTFF"), d).violations.empty());
}

#include <gtest/gtest.h>

#include <cmath>

#include "specdens/errors.hpp"
#include "specdens/spectrum.hpp"

using namespace specdens;

namespace {

SeqPair explicit_pair(std::vector<BigInt> a, std::vector<BigInt> b) {
  return SeqPair(Sequence::explicit_list(std::move(a)),
                 Sequence::explicit_list(std::move(b)));
}

SeqPair fig_a() { return explicit_pair({4, 3, 7}, {6, 4, 10}); }
SeqPair fig_b() { return explicit_pair({1, 2, 3}, {2, 3, 5}); }

std::vector<Nat> members_upto(const SpectrumClass& s, Nat n) {
  std::vector<Nat> out;
  for (Nat k = 1; k <= n; ++k) {
    if (s.member(k)) out.push_back(k);
  }
  return out;
}

Nat floor_log2(Nat n) {
  Nat e = 0;
  while (n >>= 1) ++e;
  return e;
}

// Checks count/next/nth against membership by direct scanning.
void check_consistent(const SpectrumClass& s, Nat upto) {
  Nat count = 0;
  std::vector<Nat> seen;
  for (Nat k = 1; k <= upto; ++k) {
    if (s.member(k)) {
      ++count;
      seen.push_back(k);
    }
    ASSERT_EQ(s.count_upto(k), count) << s.describe() << " at " << k;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    ASSERT_EQ(s.nth_element(i + 1), seen[i]) << s.describe();
  }
  for (Nat k = 1; k + 1 < (seen.empty() ? 1 : seen.back()); ++k) {
    auto it = std::lower_bound(seen.begin(), seen.end(), k);
    ASSERT_EQ(s.next_member(k), *it) << s.describe() << " from " << k;
  }
}

}  // namespace

TEST(Spectrum, PeriodicEvens) {
  auto evens = SpectrumClass::periodic(2, {0});
  EXPECT_TRUE(evens.member(4));
  EXPECT_FALSE(evens.member(7));
  EXPECT_EQ(evens.count_upto(10), 5u);
  EXPECT_EQ(evens.shape(), Shape::Neither);
  EXPECT_EQ(evens.has_internal_gap(), Tri::Yes);
}

TEST(Spectrum, PeriodicValidation) {
  EXPECT_THROW(SpectrumClass::periodic(0, {}), Error);
  EXPECT_THROW(SpectrumClass::periodic(2, {2}), Error);
  EXPECT_THROW(SpectrumClass::periodic(2, {0}, {4}), Error);
  EXPECT_THROW(SpectrumClass::periodic(2, {0}, {}, {3}), Error);
}

TEST(Spectrum, GeometricCounts) {
  auto pow2 = SpectrumClass::geometric(2);
  auto nonpow2 = SpectrumClass::geometric(2, 0, 0, true);
  EXPECT_FALSE(pow2.member(6));
  EXPECT_TRUE(pow2.member(1));
  EXPECT_TRUE(pow2.member(64));
  for (Nat n : {1ull, 2ull, 3ull, 7ull, 8ull, 1000ull, 1024ull, 999999ull, 1000000ull}) {
    EXPECT_EQ(pow2.count_upto(n), floor_log2(n) + 1) << n;
    EXPECT_EQ(nonpow2.count_upto(n), n - floor_log2(n) - 1) << n;
  }
}

TEST(Spectrum, StepFunctionFigure) {
  const Nat want[20] = {1, 2, 3, 4, 4, 4, 7, 8, 9, 9, 11, 12, 13, 14, 15, 16, 17, 17, 17, 17};
  for (Nat n = 1; n <= 20; ++n) EXPECT_EQ(step_function(fig_a(), n), want[n - 1]) << n;
  EXPECT_THROW(step_function(fig_a(), 21), ExhaustedError);

  auto img = SpectrumClass::step_image(fig_a());
  EXPECT_FALSE(img.member(6));
  EXPECT_EQ(members_upto(img, 20),
            (std::vector<Nat>{1, 2, 3, 4, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17}));
  EXPECT_THROW(img.member(21), ExhaustedError);
}

TEST(Spectrum, StepImageMatchesStepFunction) {
  SeqPair sp(Sequence::linear(1, 1), Sequence::linear(3, 3));
  auto img = SpectrumClass::step_image(sp);
  std::set<Nat> image;
  for (Nat n = 1; n <= 3000; ++n) {
    Nat f = step_function(sp, n);
    EXPECT_LE(f, n);
    if (n > 1) EXPECT_LE(step_function(sp, n - 1), f);
    image.insert(f);
  }
  for (Nat n = 1; n <= 2000; ++n) EXPECT_EQ(img.member(n), image.count(n) == 1) << n;
  // Block starts are fixed points and block ends carry the partial sums.
  BigInt big_a = 0, big_b = 0;
  for (std::size_t i = 0; i < 30; ++i) {
    auto [a, b] = sp.at(i);
    EXPECT_EQ(step_function(sp, to_nat(big_b + 1)), to_nat(big_b + 1));
    big_a += a;
    big_b += b;
    EXPECT_EQ(BigInt(img.count_upto(to_nat(big_b))), big_a);
  }
}

TEST(Spectrum, GConstructionExample) {
  auto g = g_construction(fig_b(), {true, true, false});
  EXPECT_EQ(members_upto(g, 20),
            (std::vector<Nat>{1, 4, 5, 8, 9, 10, 15, 16, 17, 18, 19, 20}));
  EXPECT_TRUE(g_value(fig_b(), {true, true, false}, 1));
  EXPECT_THROW(g.member(21), ExhaustedError);
}

TEST(Spectrum, GConstructionBlocks) {
  SeqPair sp(Sequence::linear(1, 1), Sequence::linear(2, 3));
  std::vector<bool> bits;
  for (int i = 0; i < 40; ++i) bits.push_back((i * 7 + 3) % 5 < 2);
  auto g = g_construction(sp, bits);
  Nat start = 0;
  for (std::size_t m = 0; m < bits.size(); ++m) {
    auto [a, b] = sp.at(m);
    Nat len = to_nat(2 * b);
    Nat ones = 0;
    for (Nat t = 1; t <= len; ++t) ones += g_value(sp, bits, start + t) ? 1 : 0;
    EXPECT_EQ(BigInt(ones), 2 * a) << m;
    EXPECT_EQ(g_value(sp, bits, start + 1), bits[m]) << m;
    EXPECT_EQ(g.member(start + 1), bits[m]);
    start += len;
  }
  check_consistent(g, start);
}

TEST(Spectrum, CountMatchesMembership) {
  std::vector<SpectrumClass> all = {
      SpectrumClass::finite({2, 5}),
      SpectrumClass::finite({}),
      SpectrumClass::cofinite({}),
      SpectrumClass::cofinite({1, 2, 7}),
      SpectrumClass::periodic(2, {0}),
      SpectrumClass::periodic(3, {1, 2}, {3}, {1, 4}),
      SpectrumClass::periodic(5, {}, {2, 9}),
      SpectrumClass::geometric(2),
      SpectrumClass::geometric(3, 1, 2),
      SpectrumClass::geometric(2, 0, 0, true),
      SpectrumClass::step_image(SeqPair(Sequence::constant(1), Sequence::constant(3))),
      g_construction(SeqPair(Sequence::constant(1), Sequence::constant(2)),
                     std::vector<bool>(600, true)),
  };
  for (const auto& s : all) {
    check_consistent(s, 1200);
    check_consistent(s.restrict_from(7), 1200);
  }
}

TEST(Spectrum, RestrictFrom) {
  auto evens = SpectrumClass::periodic(2, {0}).restrict_from(3);
  EXPECT_EQ(members_upto(evens, 10), (std::vector<Nat>{4, 6, 8, 10}));
  EXPECT_EQ(evens.kind_name(), "periodic");
  auto all = SpectrumClass::cofinite({}).restrict_from(4);
  EXPECT_EQ(all.upper_interval_start(), Nat(4));
  EXPECT_EQ(SpectrumClass::finite({2, 5}).restrict_from(3).max_member(), Nat(5));
  EXPECT_EQ(SpectrumClass::finite({2, 5}).restrict_from(6).max_member(), std::nullopt);
  auto pow2 = SpectrumClass::geometric(2).restrict_from(5);
  EXPECT_EQ(pow2.next_member(1), Nat(8));
  EXPECT_EQ(pow2.count_upto(16), 2u);
}

TEST(Spectrum, ShapesAndGaps) {
  EXPECT_EQ(SpectrumClass::finite({1, 2, 3}).has_internal_gap(), Tri::No);
  EXPECT_EQ(SpectrumClass::finite({2, 5}).has_internal_gap(), Tri::Yes);
  EXPECT_EQ(SpectrumClass::cofinite({1, 2}).has_internal_gap(), Tri::No);
  EXPECT_EQ(SpectrumClass::cofinite({1, 3}).has_internal_gap(), Tri::Yes);
  EXPECT_EQ(SpectrumClass::cofinite({1, 3}).upper_interval_start(), std::nullopt);
  EXPECT_EQ(SpectrumClass::cofinite({}).upper_interval_start(), Nat(1));
  EXPECT_EQ(SpectrumClass::geometric(2).shape(), Shape::Neither);
  EXPECT_EQ(SpectrumClass::finite({}).bounded(), Tri::Yes);
  EXPECT_EQ(SpectrumClass::step_image(fig_a()).shape(), Shape::Unknown);
  EXPECT_EQ(SpectrumClass::periodic(1, {0}).upper_interval_start(), Nat(1));
}

TEST(Spectrum, Oracle) {
  spec::OracleBacked bb;
  bb.label = "bb";
  bb.intervals = {{1, 1}, {4, 4}, {6, 6}, {13, 13}};
  bb.known_upto = 13;
  bb.shape = Shape::Neither;
  auto s = SpectrumClass::oracle(bb);
  EXPECT_EQ(members_upto(s, 13), (std::vector<Nat>{1, 4, 6, 13}));
  EXPECT_THROW(s.member(14), OracleError);
  EXPECT_EQ(s.next_member(7), Nat(13));
  EXPECT_THROW(s.next_member(14), OracleError);
  EXPECT_EQ(s.computable(), Tri::No);
}

TEST(SeqPair, RulesAndLimits) {
  SeqPair digits(Sequence::digits("57824", false), Sequence::exponential(10, 10));
  EXPECT_EQ(digits.at(0), std::make_pair(BigInt(5), BigInt(10)));
  EXPECT_EQ(digits.at(2), std::make_pair(BigInt(578), BigInt(1000)));
  EXPECT_THROW(digits.at(5), ExhaustedError);
  EXPECT_EQ(digits.length(), std::size_t(5));
  auto bounds = digits.digit_limit_bounds();
  ASSERT_TRUE(bounds);
  EXPECT_EQ(bounds->first, Rational(57824, 100000));
  EXPECT_EQ(bounds->second, Rational(57825, 100000));
  EXPECT_FALSE(digits.rational_limit());

  EXPECT_EQ(SeqPair(Sequence::constant(1), Sequence::constant(2)).rational_limit(),
            Rational(1, 2));
  EXPECT_EQ(SeqPair(Sequence::linear(1, 1), Sequence::linear(3, 3)).rational_limit(),
            Rational(1, 3));
  EXPECT_EQ(SeqPair(Sequence::constant(3), Sequence::linear(1, 4)).rational_limit(),
            Rational(0));
  EXPECT_THROW(SeqPair(Sequence::constant(2), Sequence::constant(2)).at(0), Error);
  EXPECT_THROW(explicit_pair({1}, {2}).at(1), ExhaustedError);
}

TEST(SeqPair, TwentyDigitsNeedBigIntegers) {
  SeqPair sp(Sequence::digits("57824707031250000000", false),
             Sequence::exponential(10, 10));
  auto [a, b] = sp.at(19);
  EXPECT_EQ(a.str(), "57824707031250000000");
  EXPECT_EQ(b.str(), "100000000000000000000");
  EXPECT_THROW(to_nat(b), OverflowError);
}

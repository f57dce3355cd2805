#include <gtest/gtest.h>

#include "specdens/brute.hpp"
#include "specdens/errors.hpp"
#include "support/generators.hpp"

using namespace specdens;
using eqlogic::parse;

TEST(Brute, SatAtExamples) {
  auto r = brute::brute_sat_at(parse("(distinct x y z)"), 3);
  EXPECT_TRUE(r.answer);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->size(), 3u);
  EXPECT_FALSE(brute::brute_sat_at(parse("(distinct x y z)"), 2).answer);

  r = brute::brute_sat_at(parse("(and (not (= x y)) (not (= y z)))"), 2);
  EXPECT_TRUE(r.answer);
  std::vector<std::vector<std::string>> expected = {{"x", "z"}, {"y"}};
  EXPECT_EQ(*r.witness, expected);
}

TEST(Brute, MinModelExamples) {
  EXPECT_EQ(brute::brute_min_model(parse("(= x x)")), ExtNat(1));
  EXPECT_TRUE(brute::brute_min_model(parse("(and (= x y) (not (= x y)))")).is_infinite());
  EXPECT_EQ(brute::brute_min_model(parse("(and (not (= x y)) (not (= y z)))")), ExtNat(2));
  EXPECT_EQ(brute::brute_min_model(parse("true")), ExtNat(1));
}

TEST(Brute, Caps) {
  EXPECT_THROW(brute::brute_sat_at(parse("(distinct a b c d e f g)"), 7), CapError);
  EXPECT_THROW(brute::brute_sat_at(parse("(= x y)"), 11), CapError);
  EXPECT_THROW(brute::brute_sat_at(parse("(= x y)"), 0), PreconditionError);
}

TEST(Brute, SearchCoversDomain) {
  auto f = parse("(and (not (= x y)) (= w1 w1) (= w2 w2) (= w3 w3))");
  auto a = brute::search_assignment(f, 5, true);
  ASSERT_TRUE(a);
  std::set<Nat> values;
  for (const auto& [name, v] : *a) values.insert(v);
  EXPECT_EQ(values.size(), 5u);
  EXPECT_TRUE(brute::eval_under(f, *a));
  EXPECT_FALSE(brute::search_assignment(f, 6, true));
  EXPECT_TRUE(brute::search_assignment(f, 6, false));
  EXPECT_FALSE(brute::search_assignment(parse("(distinct x y z)"), 2, false));
}

// The symbolic procedures against exhaustive enumeration.
TEST(Brute, AgreesWithEqlogicOnRandomFormulas) {
  testgen::FormulaGen gen(20261016);
  int mismatches = 0;
  for (int i = 0; i < 600; ++i) {
    auto f = gen.next();
    for (Nat n = 1; n <= 8; ++n) {
      if (eqlogic::sat_at(f, n) != brute::brute_sat_at(f, n).answer) ++mismatches;
    }
    if (eqlogic::min_model_size(f) != brute::brute_min_model(f)) ++mismatches;
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(Brute, NaiveStep) {
  SeqPair sp(Sequence::explicit_list({4, 3, 7}), Sequence::explicit_list({6, 4, 10}));
  std::vector<Nat> expected = {1, 2, 3, 4, 4, 4, 7, 8, 9, 9, 11, 12, 13, 14, 15, 16, 17, 17, 17, 17};
  for (Nat n = 1; n <= 20; ++n) EXPECT_EQ(brute::naive_step(sp, n), expected[n - 1]) << n;
}

TEST(Brute, SchemaExamples) {
  auto even = schema::parse("forall n in N: not exactly(2*n+1)");
  EXPECT_TRUE(brute::eval_schema_at(even, 4));
  EXPECT_FALSE(brute::eval_schema_at(even, 7));
  EXPECT_TRUE(brute::eval_schema_at(schema::parse("atleast(3)"), std::nullopt));
  EXPECT_FALSE(brute::eval_schema_at(schema::parse("exactly(2) or exactly(5)"), std::nullopt));

  auto pow2 = schema::parse("forall n in N: atleast(2^n) or bigor i=0..n of exactly(2^i)");
  for (Nat k = 1; k <= 70; ++k) {
    bool is_pow = (k & (k - 1)) == 0;
    EXPECT_EQ(brute::eval_schema_at(pow2, k), is_pow) << k;
  }
  EXPECT_THROW(brute::eval_schema_at(schema::parse("forall n in N: atleast(1^n)"), 3), SchemaError);
}

#include <gtest/gtest.h>

#include "specdens/errors.hpp"
#include "specdens/schema.hpp"

using namespace specdens;
using namespace specdens::schema;

namespace {

std::vector<Nat> members(const SpectrumClass& s, Nat n) {
  std::vector<Nat> out;
  for (Nat k = 1; k <= n; ++k) {
    if (s.member(k)) out.push_back(k);
  }
  return out;
}

Compiled compile(const char* text, const Env& env = {}) {
  return compile_axioms(parse(text), env);
}

}  // namespace

TEST(Schema, EvenTheory) {
  auto c = compile("forall n in N: not exactly(2*n+1)");
  EXPECT_EQ(c.spectrum.kind_name(), "periodic");
  EXPECT_TRUE(c.admits_infinite);
  EXPECT_EQ(members(c.spectrum, 10), (std::vector<Nat>{2, 4, 6, 8, 10}));
}

TEST(Schema, Trivial) {
  auto c = compile("atleast(1)");
  EXPECT_EQ(c.spectrum.kind_name(), "cofinite");
  EXPECT_EQ(c.spectrum.upper_interval_start(), Nat(1));
  EXPECT_TRUE(c.admits_infinite);
}

TEST(Schema, TwoSizes) {
  auto c = compile("exactly(2) or exactly(5)");
  EXPECT_EQ(c.spectrum.kind_name(), "finite");
  EXPECT_EQ(members(c.spectrum, 20), (std::vector<Nat>{2, 5}));
  EXPECT_FALSE(c.admits_infinite);
}

TEST(Schema, Powers) {
  auto c = compile("forall n in N: atleast(2^n) or bigor i=0..n of exactly(2^i)");
  EXPECT_EQ(c.spectrum.kind_name(), "geometric");
  EXPECT_EQ(members(c.spectrum, 20), (std::vector<Nat>{1, 2, 4, 8, 16}));
  EXPECT_TRUE(c.admits_infinite);

  auto d = compile("forall n in N: not exactly(2^n)");
  EXPECT_EQ(d.spectrum.kind_name(), "geometric");
  EXPECT_EQ(members(d.spectrum, 10), (std::vector<Nat>{3, 5, 6, 7, 9, 10}));
  EXPECT_TRUE(d.admits_infinite);
}

TEST(Schema, OnlyInfinite) {
  auto c = compile("forall n in N*: atleast(n)");
  EXPECT_TRUE(members(c.spectrum, 50).empty());
  EXPECT_EQ(c.spectrum.bounded(), Tri::Yes);
  EXPECT_TRUE(c.admits_infinite);
}

TEST(Schema, OneFiniteSizePlusInfinite) {
  auto c = compile("forall m in N*: exactly(2) or atleast(m)");
  EXPECT_EQ(members(c.spectrum, 50), (std::vector<Nat>{2}));
  EXPECT_TRUE(c.admits_infinite);
}

TEST(Schema, Contradiction) {
  auto c = compile("atleast(2) and atmost(1)");
  EXPECT_TRUE(members(c.spectrum, 10).empty());
  EXPECT_FALSE(c.admits_infinite);
}

TEST(Schema, ThreeExamples) {
  auto c = compile("exactly(1) or atleast(3)");
  EXPECT_EQ(c.spectrum.kind_name(), "cofinite");
  EXPECT_EQ(members(c.spectrum, 6), (std::vector<Nat>{1, 3, 4, 5, 6}));
  EXPECT_TRUE(c.admits_infinite);
  auto d = compile("exactly(1) or exactly(3)");
  EXPECT_EQ(members(d.spectrum, 6), (std::vector<Nat>{1, 3}));
  EXPECT_FALSE(d.admits_infinite);
}

TEST(Schema, StepImage) {
  SeqPair sp(Sequence::constant(1), Sequence::constant(3));
  Env env{&sp};
  auto c = compile("forall n in N*: atleast(f(n+1)) or bigor i=1..n of exactly(f(i))", env);
  EXPECT_EQ(c.spectrum.kind_name(), "step_image");
  EXPECT_EQ(members(c.spectrum, 12), (std::vector<Nat>{1, 4, 7, 10}));
  EXPECT_TRUE(c.admits_infinite);
  EXPECT_THROW(compile("forall n in N*: atleast(f(n))"), SchemaError);
}

TEST(Schema, LinesIntersect) {
  auto c = compile("# evens of size at least 3\natleast(3)\n\nforall n in N: not exactly(2*n+1)\n");
  EXPECT_EQ(c.spectrum.kind_name(), "periodic");
  EXPECT_EQ(members(c.spectrum, 12), (std::vector<Nat>{4, 6, 8, 10, 12}));
  auto d = compile("atmost(9)\nforall n in N: not exactly(3*n)");
  EXPECT_EQ(members(d.spectrum, 12), (std::vector<Nat>{1, 2, 4, 5, 7, 8}));
  EXPECT_FALSE(d.admits_infinite);
}

TEST(Schema, Fallback) {
  const char* text = "forall n in N: atmost(n+2) or exactly(7)";
  auto c = compile(text);
  EXPECT_EQ(c.spectrum.kind_name(), "oracle");
  EXPECT_FALSE(c.warnings.empty());
  EXPECT_EQ(members(c.spectrum, 30), (std::vector<Nat>{1, 2, 7}));
  EXPECT_FALSE(c.admits_infinite);
  CompileOptions strict;
  strict.allow_oracle_fallback = false;
  EXPECT_THROW(compile_axioms(parse(text), {}, strict), SchemaError);
}

TEST(Schema, DirectSemantics) {
  auto s = parse("forall n in N: not exactly(2*n+1)");
  EXPECT_TRUE(holds_at(s, 4, {}));
  EXPECT_FALSE(holds_at(s, 7, {}));
  EXPECT_TRUE(holds_at_infinity(parse("atleast(3)")));
  EXPECT_FALSE(holds_at_infinity(parse("exactly(2) or exactly(5)")));
}

TEST(Schema, Errors) {
  EXPECT_THROW(parse("atleast("), SchemaError);
  EXPECT_THROW(parse("atleast(3) or"), SchemaError);
  EXPECT_THROW(parse("sometimes(3)"), SchemaError);
  EXPECT_THROW(parse("forall n in Z: atleast(n)"), SchemaError);
  EXPECT_THROW(parse("forall n in N: atleast(k)"), SchemaError);
  EXPECT_THROW(parse("atleast(3) $"), SchemaError);
  EXPECT_THROW(holds_at(parse("forall n in N: exactly(0*n)"), 3, {}), SchemaError);
}

TEST(Schema, PrintsBack) {
  auto s = parse("forall n in N*: atleast(f(n+1)) or bigor i=1..n of exactly(f(i))");
  EXPECT_EQ(s.axioms[0].body.to_string(),
            "(atleast(f(n+1)) or bigor i=1..n of exactly(f(i)))");
  EXPECT_EQ(s.axioms[0].index_from, 1u);
}

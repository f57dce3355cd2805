#include <gtest/gtest.h>

#include "specdens/eqlogic.hpp"
#include "specdens/errors.hpp"

using namespace specdens;
using namespace specdens::eqlogic;

namespace {

Var v(const char* name) { return Var::intern(name); }

// Bell numbers from the Bell triangle, independent of the enumerator.
std::vector<std::size_t> bell_triangle(std::size_t upto) {
  std::vector<std::size_t> bell{1};
  std::vector<std::size_t> row{1};
  for (std::size_t n = 1; n <= upto; ++n) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t x : row) next.push_back(next.back() + x);
    row = next;
    bell.push_back(row[0]);
  }
  return bell;
}

std::size_t count(const VarSet& vs) {
  auto s = arrangements(vs);
  std::size_t n = 0;
  while (s.next()) ++n;
  return n;
}

}  // namespace

TEST(Parse, Atoms) {
  Formula f = parse("(= x y)");
  ASSERT_EQ(f.kind(), Kind::Eq);
  EXPECT_EQ(f.lhs(), v("x"));
  EXPECT_EQ(f.rhs(), v("y"));
  EXPECT_EQ(parse("true").kind(), Kind::True);
  EXPECT_EQ(parse("  false ").kind(), Kind::False);
}

TEST(Parse, Nested) {
  Formula f = parse("(and (not (= x y)) (not (= y z)))");
  Formula want = Formula::conj({Formula::neg(Formula::eq(v("x"), v("y"))),
                                Formula::neg(Formula::eq(v("y"), v("z")))});
  EXPECT_EQ(f, want);
}

TEST(Parse, DistinctIsPairwise) {
  Formula f = parse("(distinct x y z)");
  ASSERT_EQ(f.kind(), Kind::And);
  ASSERT_EQ(f.children().size(), 3u);
  EXPECT_EQ(to_string(f),
            "(and (not (= x y)) (not (= x z)) (not (= y z)))");
}

TEST(Parse, SugarIsNormalized) {
  EXPECT_EQ(to_string(parse("(=> (= a b) (= b c))")),
            "(or (not (= a b)) (= b c))");
  EXPECT_EQ(to_string(parse("(iff (= a b) false)")),
            "(and (or (not (= a b)) false) (or (not false) (= a b)))");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("(= x)"), ParseError);
  EXPECT_THROW(parse("(xor (= x y) true)"), ParseError);
  EXPECT_THROW(parse("(= x y"), ParseError);
  EXPECT_THROW(parse("(= x y))"), ParseError);
  EXPECT_THROW(parse("(and)"), ParseError);
  EXPECT_THROW(parse("(distinct x)"), ParseError);
  EXPECT_THROW(parse("(= 1x y)"), ParseError);
  EXPECT_THROW(parse("maybe"), ParseError);
  try {
    parse("(and (= x y) (frob x))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 14u);
  }
}

TEST(Parse, RoundTrip) {
  for (const char* text :
       {"true", "(= x y)", "(not (= x_1 Y2))", "(and (= a b))",
        "(or (= a b) (and true false) (not (not (= c a))))"}) {
    Formula f = parse(text);
    EXPECT_EQ(to_string(f), text);
    EXPECT_EQ(parse(to_string(f)), f);
  }
}

TEST(FreeVars, Examples) {
  EXPECT_EQ(free_vars(Formula::eq(v("x"), v("y"))), (VarSet{v("x"), v("y")}));
  EXPECT_TRUE(free_vars(Formula::truth()).empty());
  EXPECT_EQ(free_vars(parse("(and (= x x) (= y z))")),
            (VarSet{v("x"), v("y"), v("z")}));
}

TEST(Arrangements, SmallCounts) {
  auto s = arrangements({v("x")});
  auto a = s.next();
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, Arrangement({{v("x")}}));
  EXPECT_FALSE(s.next());

  auto s2 = arrangements({v("x"), v("y")});
  EXPECT_EQ(*s2.next(), Arrangement({{v("x"), v("y")}}));
  EXPECT_EQ(*s2.next(), Arrangement({{v("x")}, {v("y")}}));
  EXPECT_FALSE(s2.next());

  EXPECT_EQ(count({v("x"), v("y"), v("z")}), 5u);
  EXPECT_EQ(count({}), 1u);
}

TEST(Arrangements, BellCounts) {
  auto bell = bell_triangle(8);
  VarSet vs;
  for (std::size_t n = 0; n <= 8; ++n) {
    EXPECT_EQ(count(vs), bell[n]) << n;
    vs.insert(Var::intern("v" + std::to_string(n)));
  }
}

TEST(Arrangements, DistinctAndRestartable) {
  VarSet vs{v("a"), v("b"), v("c"), v("d")};
  std::vector<Arrangement> seen;
  auto s = arrangements(vs);
  while (auto a = s.next()) {
    EXPECT_EQ(a->vars(), vs);
    for (const auto& b : seen) EXPECT_FALSE(b == *a);
    seen.push_back(*a);
  }
  auto again = arrangements(vs);
  EXPECT_EQ(*again.next(), seen.front());
}

TEST(Arrangements, Cap) {
  VarSet vs;
  for (int i = 0; i < 13; ++i) vs.insert(Var::intern("c" + std::to_string(i)));
  EXPECT_THROW(arrangements(vs), CapError);
  Limits small;
  small.var_cap = 2;
  EXPECT_THROW(arrangements({v("x"), v("y"), v("z")}, small), CapError);
  EXPECT_THROW(min_model_size(parse("(distinct x y z)"), small), CapError);
}

TEST(Arrangements, InvalidBlocks) {
  EXPECT_THROW(Arrangement({{v("x")}, {}}), Error);
  EXPECT_THROW(Arrangement({{v("x")}, {v("x")}}), Error);
}

TEST(Eval, Examples) {
  Formula e = Formula::eq(v("x"), v("y"));
  EXPECT_TRUE(eval_under(e, Arrangement({{v("x"), v("y")}})));
  EXPECT_FALSE(eval_under(e, Arrangement({{v("x")}, {v("y")}})));
  EXPECT_TRUE(eval_under(parse("(and (not (= x y)) (not (= y z)))"),
                         Arrangement({{v("x"), v("z")}, {v("y")}})));
  EXPECT_THROW(eval_under(e, Arrangement({{v("x")}})), UnboundVariable);
}

TEST(Eval, EqIsSymmetric) {
  auto s = arrangements({v("x"), v("y"), v("z")});
  while (auto a = s.next()) {
    EXPECT_EQ(eval_under(parse("(= x z)"), *a), eval_under(parse("(= z x)"), *a));
  }
}

TEST(ArrangementFormula, Examples) {
  EXPECT_EQ(to_string(arrangement_formula(Arrangement({{v("x"), v("y")}}))),
            "(= x y)");
  EXPECT_EQ(to_string(arrangement_formula(Arrangement({{v("x")}, {v("y")}}))),
            "(not (= x y))");
  EXPECT_EQ(
      to_string(arrangement_formula(Arrangement({{v("x"), v("y")}, {v("z")}}))),
      "(and (= x y) (not (= x z)) (not (= y z)))");
  EXPECT_EQ(arrangement_formula(Arrangement({{v("x")}})).kind(), Kind::True);
}

TEST(ArrangementFormula, CharacterizesItsArrangement) {
  VarSet vs{v("p"), v("q"), v("r"), v("s")};
  auto outer = arrangements(vs);
  while (auto a = outer.next()) {
    Formula f = arrangement_formula(*a);
    auto inner = arrangements(vs);
    while (auto b = inner.next()) {
      EXPECT_EQ(eval_under(f, *b), *a == *b);
    }
  }
}

TEST(MinModel, Examples) {
  EXPECT_EQ(min_model_size(parse("(= x x)")), ExtNat(1));
  EXPECT_EQ(min_model_size(parse("(distinct x y z)")), ExtNat(3));
  EXPECT_EQ(min_model_size(parse("(and (not (= x y)) (not (= y z)))")), ExtNat(2));
  EXPECT_EQ(min_model_size(parse("true")), ExtNat(1));
  EXPECT_TRUE(min_model_size(parse("false")).is_infinite());
  EXPECT_TRUE(min_model_size(parse("(not (= x x))")).is_infinite());
  EXPECT_TRUE(
      min_model_size(parse("(and (= x y) (= y z) (not (= x z)))")).is_infinite());
}

TEST(SatAt, Examples) {
  EXPECT_TRUE(sat_at(parse("(= x x)"), 1));
  EXPECT_FALSE(sat_at(parse("(distinct x y z)"), 2));
  EXPECT_TRUE(sat_at(parse("(distinct x y z)"), 3));
  EXPECT_TRUE(sat_at(parse("(and (not (= x y)) (not (= y z)))"), 2));
  EXPECT_FALSE(sat_at(parse("false"), 100));
}

TEST(ExtNatOrder, InfiniteOnTop) {
  EXPECT_LT(ExtNat(1), ExtNat(2));
  EXPECT_LT(ExtNat(~0ull), ExtNat::infinite());
  EXPECT_EQ(ExtNat::infinite(), ExtNat::infinite());
  EXPECT_EQ(ExtNat::infinite().to_string(), "infinite");
  EXPECT_THROW(ExtNat::infinite().value(), Error);
}

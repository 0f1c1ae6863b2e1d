#include <gtest/gtest.h>

#include "goedel/errors.hpp"
#include "goedel/expr.hpp"
#include "goedel/generate.hpp"

using namespace goedel;

TEST(Expr, NumeralsAreRunCompressed) {
  Expr three = Expr::succ(Expr::succ(Expr::succ(Expr::zero())));
  EXPECT_EQ(three, Expr::numeral(3));
  EXPECT_EQ(three.child(0), Expr::numeral(2));
  EXPECT_EQ(*three.numeral_value(), 3);
  mpz_class big("1000000000000000000000000");
  Expr n = Expr::numeral(big);
  EXPECT_EQ(n.run(), big);
  EXPECT_EQ(*n.child(0).numeral_value(), big - 1);
  EXPECT_EQ(n.base(), Expr::zero());
}

TEST(Expr, VariablesArePrimeStacks) {
  EXPECT_EQ(Expr::variable(0), Expr::var());
  EXPECT_EQ(Expr::variable(2), Expr::prime(Expr::prime(Expr::var())));
  EXPECT_EQ(*Expr::variable(5).variable_index(), 5u);
  EXPECT_EQ(Expr::variable(5).op(), Op::Prime);
  EXPECT_FALSE(Expr::prime(Expr::zero()).is_variable());
}

TEST(Expr, MakeChecksArity) {
  std::vector<Expr> one{Expr::zero()};
  EXPECT_THROW(Expr::make(Op::Add, one), ArityMismatch);
  EXPECT_EQ(Expr::make(Op::Succ, one), Expr::numeral(1));
}

TEST(Expr, PrintParseRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    Expr f = random_formula(rng, 4, 3);
    EXPECT_EQ(parse(to_string(f)), f);
    Expr t = random_term(rng, 5, 3, 40);
    EXPECT_EQ(parse(to_string(t)), t);
  }
  Expr n = Expr::numeral(mpz_class("98765432109876543210"));
  EXPECT_EQ(to_string(n), "(num 98765432109876543210)");
  EXPECT_EQ(parse(to_string(n)), n);
}

TEST(Expr, ParseSugar) {
  Expr a = parse("(= 0 0)"), b = parse("(= 0 1)");
  EXPECT_EQ(parse("(imp (= 0 0) (= 0 1))"), Expr::neg(Expr::conj(a, Expr::neg(b))));
  EXPECT_EQ(parse("(or (= 0 0) (= 0 1))"), Expr::neg(Expr::conj(Expr::neg(a), Expr::neg(b))));
  EXPECT_EQ(parse("(v 3)"), Expr::variable(3));
  EXPECT_EQ(parse("(p (+ 0 1))").op(), Op::Prime);
}

TEST(Expr, SyntaxErrorsCarryOffsets) {
  for (const char* bad : {"", "(", "(+ 0)", "(foo 0)", "(= 0 0))", "(v x)"}) {
    EXPECT_THROW(parse(bad), SyntaxError) << bad;
  }
  try {
    parse("(S 0 0)");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_GT(e.offset(), 0u);
  }
}

TEST(Expr, OrderingIsTotalAndConsistent) {
  Rng rng(9);
  std::vector<Expr> xs;
  for (int i = 0; i < 100; ++i) xs.push_back(random_formula(rng, 3, 2));
  for (const auto& a : xs)
    for (const auto& b : xs) {
      EXPECT_EQ(a == b, (a <=> b) == 0);
      if (a == b) EXPECT_EQ(a.hash(), b.hash());
    }
}
